#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsbm/graph.hpp"
#include "rsbm/model.hpp"
#include "rsbm/spectral.hpp"

namespace rsbm {

enum class RecoveryMethod { spectral_adjacency, spectral_saw, majority_only };

std::string method_name(RecoveryMethod m);
RecoveryMethod method_from_name(const std::string& name);

/// One synchronous majority round: every vertex takes the sign of the sum
/// of its neighbors' labels, all updates computed from the previous vector.
/// A zero sum keeps the current label.
Labeling majority_step(const Graph& g, const Labeling& labels);
Labeling majority_step_serial(const Graph& g, const Labeling& labels);

/// max over the global sign flip of the fraction of matching coordinates.
struct Overlap {
    double agreement = 0.0; // in [1/2, 1]
    long errors = 0;        // vertices to flip, modulo the global flip
};
Overlap overlap(const Labeling& a, const Labeling& b);

struct RecoveryResult {
    Labeling initial_labels;
    Labeling final_labels;
    int rounds_used = 0;
    bool converged = false; // fixed point reached
    RecoveryMethod method = RecoveryMethod::majority_only;
    // errors vs planted labels before round 1 and after each round;
    // recorded only when planted labels are supplied
    std::vector<long> per_round_errors;
    std::optional<double> agreement; // final, vs planted
    std::optional<double> lambda2;   // spectral methods only
    std::optional<std::uint64_t> seed; // eigensolver seed, spectral methods
    std::vector<std::string> warnings;
};

int default_majority_rounds(int num_vertices); // ceil(4 log2 N) + 10

/// Majority dynamics until a fixed point or max_rounds.
RecoveryResult majority_iterate(const Graph& g, const Labeling& start, int max_rounds,
                                const Labeling* planted = nullptr);

struct RecoverOptions {
    RecoveryMethod method = RecoveryMethod::spectral_adjacency;
    int saw_depth = 1;
    SolveOptions solve;
    int max_rounds = -1;            // -1: default_majority_rounds
    bool balanced_rounding = false; // top-half coordinates instead of the sign rule
    std::optional<RsbmParams> params; // enables the spectral-condition warning
};

/// Full pipeline: second eigenvector (adjacency or SAW), sign rounding
/// (ties to +1), then iterated majority.
RecoveryResult spectral_recover(const Graph& g, const RecoverOptions& opts,
                                const Labeling* planted = nullptr);

/// Labels from a vector: coordinates > 0 (or >= 0) map to +1. With
/// balanced rounding the top half by value maps to +1 (ties by index).
Labeling round_labels(const std::vector<double>& v, bool balanced);

} // namespace rsbm
