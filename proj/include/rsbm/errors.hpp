#pragma once

#include <stdexcept>
#include <string>

namespace rsbm {

// Error taxonomy shared by the library and the CLI. The CLI maps
// ValidationError/ParseError to exit code 2 and everything else to 1.

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_number(line) {}
    long line_number;
};

struct SamplingError : std::runtime_error {
    SamplingError(const std::string& what, long attempts)
        : std::runtime_error(what + " after " + std::to_string(attempts) + " attempts"),
          attempts(attempts) {}
    long attempts;
};

struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double best_residual)
        : std::runtime_error(what + " (best residual " + std::to_string(best_residual) + ")"),
          best_residual(best_residual) {}
    double best_residual;
};

struct ResourceError : std::runtime_error {
    ResourceError(const std::string& what, double estimated_cost)
        : std::runtime_error(what), estimated_cost(estimated_cost) {}
    double estimated_cost;
};

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rsbm
