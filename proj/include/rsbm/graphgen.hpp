#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsbm/graph.hpp"
#include "rsbm/model.hpp"

namespace rsbm {

enum class Sampler { configuration, permutation };

std::string sampler_name(Sampler s);
Sampler sampler_from_name(const std::string& name);

/// A sampled graph together with its planted partition.
struct PlantedInstance {
    Graph graph;
    Labeling labels; // +1 on side A, -1 on side B
    RsbmParams params;
    std::uint64_t seed = 0;
    Sampler sampler = Sampler::configuration;
};

inline constexpr long kDefaultMaxRejects = 1000;

/// Uniform simple d-regular graph on n vertices by configuration-model
/// matching with whole-graph rejection of multigraphs. The acceptance rate
/// is exp((1-d^2)/4) + o(1), so this is only practical for small d; use
/// sample_regular for larger degrees.
Graph sample_regular_config(int n, int d, std::uint64_t seed, long max_rejects = kDefaultMaxRejects);

/// Same contract for bipartite d-regular graphs on sides {0..n-1} and
/// {n..2n-1}; every edge crosses sides.
Graph sample_bipartite_config(int n, int d, std::uint64_t seed, long max_rejects = kDefaultMaxRejects);

/// Simple d-regular graph by sequential stub matching: each step picks a
/// uniformly random admissible stub pair (no loop, no repeated edge) and
/// restarts the whole graph on a dead end. Runs in O(n d^2) with high
/// probability at any fixed d; the output distribution is asymptotically
/// uniform (Steger-Wormald).
Graph sample_regular(int n, int d, std::uint64_t seed, long max_rejects = kDefaultMaxRejects);

/// Bipartite counterpart of sample_regular.
Graph sample_bipartite_regular(int n, int d, std::uint64_t seed, long max_rejects = kDefaultMaxRejects);

/// Acceptance statistics of the pure rejection sampler: runs `attempts`
/// configuration-model matchings and counts how many are simple.
struct SimplicityStats {
    long attempts = 0;
    long accepted = 0;
    double rate() const { return attempts > 0 ? static_cast<double>(accepted) / attempts : 0.0; }
};
SimplicityStats simplicity_rate(int n, int d, long attempts, std::uint64_t seed);

/// Planted instance: two independent d1-regular graphs on the sides plus a
/// d2-regular bipartite graph across, composed on a uniformly relabeled
/// vertex set. Labels record the planted sides.
PlantedInstance sample_rsbm(const RsbmParams& params, std::uint64_t seed,
                            long max_rejects = kDefaultMaxRejects);

/// Planted instance via the permutation model: an n-lift of the two-vertex
/// base multigraph with d1/2 loops per vertex and d2 cross edges. Requires
/// even d1. Within-side edges come from d1/2 permutations per side, cross
/// edges from d2 permutations; images are drawn sequentially among
/// admissible choices with whole-sample restart on dead ends.
PlantedInstance sample_lift(const RsbmParams& params, std::uint64_t seed,
                            long max_rejects = kDefaultMaxRejects);

/// Compose a planted instance from separately sampled parts. graph_a and
/// graph_b live on n vertices each, cross on 2n (sides {0..n-1}, {n..2n-1}).
/// Used by sample_rsbm and by tests that need nonstandard degrees.
PlantedInstance compose_rsbm(const RsbmParams& params, const Graph& side_a, const Graph& side_b,
                             const Graph& cross, std::uint64_t seed, Sampler sampler,
                             bool relabel = true);

/// Invariant audit for a planted instance; returns violated invariants by
/// name (empty report on a healthy instance).
struct InstanceAudit {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
InstanceAudit validate_instance(const PlantedInstance& inst);

} // namespace rsbm
