#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rsbm/graph.hpp"

namespace rsbm {

/// Symmetric linear operator on R^dim. `norm_bound` must dominate the
/// spectral radius; it is used as the shift that makes iteration matrices
/// positive semidefinite. `entrywise_nonnegative` marks operators whose
/// dominant eigenvalue is the largest in magnitude (Perron), which lets the
/// solver skip the negative-side probe for the first pair.
struct LinearOperator {
    int dim = 0;
    double norm_bound = 0.0;
    bool entrywise_nonnegative = false;
    std::function<void(const double*, double*)> apply;
};

LinearOperator adjacency_operator(const Graph& g);

/// (Ax)_v = sum of x over the neighbors of v.
std::vector<double> matvec(const Graph& g, const std::vector<double>& x);
std::vector<double> matvec_serial(const Graph& g, const std::vector<double>& x);

struct SolveOptions {
    double tolerance = 1e-10;
    long max_iter = 100000;
    std::uint64_t seed = 1;
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
    double residual = 0.0;
    long iterations = 0;
};

/// Leading eigenpairs ordered by descending magnitude.
///
/// Each pair comes from power iteration on the shifted operator M + cI
/// (c = norm_bound), Gram-Schmidt-deflated against all previously found
/// vectors every step; a mirrored iteration on cI - M probes the negative
/// end so that pairs are magnitude-ordered. For regular graphs the first
/// pair (d, e/sqrt(N)) is supplied analytically and verified, not iterated.
struct SpectrumSummary {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    std::vector<double> residuals;
    std::vector<long> iterations;
    std::optional<double> gamma; // 1 - lambda2/d, regular graphs only
    double tolerance = 0.0;
    std::uint64_t seed = 0;
    bool analytic_first = false;
    std::vector<std::string> notes;

    // true when two reported eigenvalues coincide within tol (repeated
    // eigenvalue; the reported vectors span an arbitrary basis of the space)
    bool has_degenerate_pair(double tol) const;
};

SpectrumSummary top_eigenpairs(const Graph& g, int k, const SolveOptions& opts);
SpectrumSummary top_eigenpairs(const LinearOperator& op, int k, const SolveOptions& opts);

/// Dominant eigenpair of a regular graph's adjacency matrix restricted to
/// the orthogonal complement of the all-ones vector (exact projection each
/// step). This is the second-largest eigenvalue *by value*, the quantity in
/// the spectral gap gamma = 1 - lambda2/d.
EigenPair second_eigenvector(const Graph& g, const SolveOptions& opts);

/// Dominant-by-value eigenpair of `op` after deflating `deflate`.
EigenPair dominant_in_complement(const LinearOperator& op,
                                 const std::vector<std::vector<double>>& deflate,
                                 const SolveOptions& opts);

} // namespace rsbm
