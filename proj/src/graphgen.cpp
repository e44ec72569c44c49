#include "rsbm/graphgen.hpp"

#include <algorithm>
#include <unordered_set>

#include "rsbm/errors.hpp"
#include "rsbm/rng.hpp"

namespace rsbm {
namespace {

// stream ids for deriving independent component generators from one seed
enum StreamId : std::uint64_t {
    kStreamRelabel = 0,
    kStreamSideA = 1,
    kStreamSideB = 2,
    kStreamCross = 3,
};

std::uint64_t edge_key(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
}

// left and right indices live in separate spaces; no normalization
std::uint64_t bipartite_key(int left, int right, int n) {
    return static_cast<std::uint64_t>(left) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(right);
}

// One configuration-model matching: stubs shuffled and paired consecutively.
// Returns true and fills `edges` when the induced multigraph is simple.
bool config_matching(int n, int d, Rng& rng, std::vector<Edge>& edges) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);
    rng.shuffle(stubs);
    edges.clear();
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(stubs.size());
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u == v) return false;
        if (!seen.insert(edge_key(u, v, n)).second) return false;
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return true;
}

bool bipartite_config_matching(int n, int d, Rng& rng, std::vector<Edge>& edges) {
    std::vector<int> right;
    right.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) right.push_back(v);
    rng.shuffle(right);
    edges.clear();
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(right.size());
    std::size_t k = 0;
    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < d; ++i, ++k) {
            int v = right[k];
            if (!seen.insert(bipartite_key(u, v, n)).second) return false;
            edges.emplace_back(u, n + v);
        }
    }
    return true;
}

void check_regular_pre(int n, int d) {
    if (n <= 0) throw ValidationError("n must be positive");
    if (d <= 0) throw ValidationError("d must be positive");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw ValidationError("n*d must be even (" + std::to_string(n) + "*" + std::to_string(d) +
                              " half-edges cannot be matched)");
    if (d >= n) throw ValidationError("d < n required for a simple regular graph");
}

void check_bipartite_pre(int n, int d) {
    if (n <= 0) throw ValidationError("n must be positive");
    if (d <= 0) throw ValidationError("d must be positive");
    if (d > n) throw ValidationError("d <= n required for a simple bipartite regular graph");
}

} // namespace

std::string sampler_name(Sampler s) {
    return s == Sampler::configuration ? "configuration" : "permutation";
}

Sampler sampler_from_name(const std::string& name) {
    if (name == "configuration") return Sampler::configuration;
    if (name == "permutation") return Sampler::permutation;
    throw ValidationError("unknown sampler '" + name + "' (expected configuration or permutation)");
}

Graph sample_regular_config(int n, int d, std::uint64_t seed, long max_rejects) {
    check_regular_pre(n, d);
    Rng rng = Rng::stream(seed, kStreamSideA);
    std::vector<Edge> edges;
    for (long attempt = 0; attempt <= max_rejects; ++attempt)
        if (config_matching(n, d, rng, edges)) return Graph::from_edges(n, edges);
    throw SamplingError("configuration model produced no simple graph", max_rejects + 1);
}

Graph sample_bipartite_config(int n, int d, std::uint64_t seed, long max_rejects) {
    check_bipartite_pre(n, d);
    Rng rng = Rng::stream(seed, kStreamCross);
    std::vector<Edge> edges;
    for (long attempt = 0; attempt <= max_rejects; ++attempt)
        if (bipartite_config_matching(n, d, rng, edges)) return Graph::from_edges(2 * n, edges);
    throw SamplingError("bipartite configuration model produced no simple graph", max_rejects + 1);
}

SimplicityStats simplicity_rate(int n, int d, long attempts, std::uint64_t seed) {
    check_regular_pre(n, d);
    Rng rng = Rng::stream(seed, kStreamSideA);
    SimplicityStats stats;
    stats.attempts = attempts;
    std::vector<Edge> edges;
    for (long i = 0; i < attempts; ++i)
        if (config_matching(n, d, rng, edges)) ++stats.accepted;
    return stats;
}

namespace {

// Sequential admissible-pair matching. Picks uniformly among admissible
// stub pairs by rejection against the full stub multiset; near the end,
// where random probing stalls, it enumerates the admissible pairs and picks
// one uniformly. Returns false on a dead end (no admissible pair left).
bool sequential_matching(int n, int d, Rng& rng, std::vector<Edge>& edges) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);
    edges.clear();
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(stubs.size());

    auto admissible = [&](int u, int v) { return u != v && !seen.count(edge_key(u, v, n)); };
    auto commit = [&](std::size_t i, std::size_t j) {
        int u = stubs[i], v = stubs[j];
        seen.insert(edge_key(u, v, n));
        edges.emplace_back(std::min(u, v), std::max(u, v));
        if (i < j) std::swap(i, j);
        stubs[i] = stubs.back();
        stubs.pop_back();
        stubs[j] = stubs.back();
        stubs.pop_back();
    };

    while (!stubs.empty()) {
        bool placed = false;
        for (int probe = 0; probe < 64 && !placed; ++probe) {
            std::size_t i = static_cast<std::size_t>(rng.below(stubs.size()));
            std::size_t j = static_cast<std::size_t>(rng.below(stubs.size() - 1));
            if (j >= i) ++j;
            if (admissible(stubs[i], stubs[j])) {
                commit(i, j);
                placed = true;
            }
        }
        if (placed) continue;
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (std::size_t i = 0; i < stubs.size(); ++i)
            for (std::size_t j = i + 1; j < stubs.size(); ++j)
                if (admissible(stubs[i], stubs[j])) candidates.emplace_back(i, j);
        if (candidates.empty()) return false;
        auto [i, j] = candidates[rng.below(candidates.size())];
        commit(i, j);
    }
    return true;
}

bool sequential_bipartite_matching(int n, int d, Rng& rng, std::vector<Edge>& edges) {
    std::vector<int> left, right;
    left.reserve(static_cast<std::size_t>(n) * d);
    right.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) {
            left.push_back(v);
            right.push_back(v);
        }
    edges.clear();
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(left.size());

    auto admissible = [&](int u, int v) { return !seen.count(bipartite_key(u, v, n)); };
    auto commit = [&](std::size_t i, std::size_t j) {
        int u = left[i], v = right[j];
        seen.insert(bipartite_key(u, v, n));
        edges.emplace_back(u, n + v);
        left[i] = left.back();
        left.pop_back();
        right[j] = right.back();
        right.pop_back();
    };

    while (!left.empty()) {
        bool placed = false;
        for (int probe = 0; probe < 64 && !placed; ++probe) {
            std::size_t i = static_cast<std::size_t>(rng.below(left.size()));
            std::size_t j = static_cast<std::size_t>(rng.below(right.size()));
            if (admissible(left[i], right[j])) {
                commit(i, j);
                placed = true;
            }
        }
        if (placed) continue;
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t j = 0; j < right.size(); ++j)
                if (admissible(left[i], right[j])) candidates.emplace_back(i, j);
        if (candidates.empty()) return false;
        auto [i, j] = candidates[rng.below(candidates.size())];
        commit(i, j);
    }
    return true;
}

} // namespace

Graph sample_regular(int n, int d, std::uint64_t seed, long max_rejects) {
    check_regular_pre(n, d);
    Rng rng = Rng::stream(seed, kStreamSideA);
    std::vector<Edge> edges;
    for (long attempt = 0; attempt <= max_rejects; ++attempt)
        if (sequential_matching(n, d, rng, edges)) return Graph::from_edges(n, edges);
    throw SamplingError("sequential matching dead-ended on every attempt", max_rejects + 1);
}

Graph sample_bipartite_regular(int n, int d, std::uint64_t seed, long max_rejects) {
    check_bipartite_pre(n, d);
    Rng rng = Rng::stream(seed, kStreamCross);
    std::vector<Edge> edges;
    for (long attempt = 0; attempt <= max_rejects; ++attempt)
        if (sequential_bipartite_matching(n, d, rng, edges)) return Graph::from_edges(2 * n, edges);
    throw SamplingError("sequential bipartite matching dead-ended on every attempt", max_rejects + 1);
}

PlantedInstance compose_rsbm(const RsbmParams& params, const Graph& side_a, const Graph& side_b,
                             const Graph& cross, std::uint64_t seed, Sampler sampler, bool relabel) {
    const int n = params.n;
    if (side_a.num_vertices() != n || side_b.num_vertices() != n)
        throw ValidationError("side graphs must have n vertices");
    if (cross.num_vertices() != 2 * n) throw ValidationError("cross graph must have 2n vertices");

    std::vector<int> tau(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < 2 * n; ++v) tau[v] = v;
    if (relabel) {
        Rng rng = Rng::stream(seed, kStreamRelabel);
        rng.shuffle(tau);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(side_a.num_edges() + side_b.num_edges() + cross.num_edges()));
    auto add = [&](int u, int v) {
        int a = tau[u], b = tau[v];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    };
    for (const auto& [u, v] : side_a.edges()) add(u, v);
    for (const auto& [u, v] : side_b.edges()) add(u + n, v + n);
    for (const auto& [u, v] : cross.edges()) add(u, v);

    std::vector<std::int8_t> signs(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < 2 * n; ++v) signs[tau[v]] = v < n ? 1 : -1;

    PlantedInstance inst;
    inst.graph = Graph::from_edges(2 * n, edges);
    inst.labels = Labeling(std::move(signs));
    inst.params = params;
    inst.seed = seed;
    inst.sampler = sampler;
    return inst;
}

PlantedInstance sample_rsbm(const RsbmParams& params, std::uint64_t seed, long max_rejects) {
    params.validate();
    Graph side_a = sample_regular(params.n, params.d1, Rng::stream(seed, kStreamSideA).next_u64(), max_rejects);
    Graph side_b = sample_regular(params.n, params.d1, Rng::stream(seed, kStreamSideB).next_u64(), max_rejects);
    Graph cross =
        sample_bipartite_regular(params.n, params.d2, Rng::stream(seed, kStreamCross).next_u64(), max_rejects);
    return compose_rsbm(params, side_a, side_b, cross, seed, Sampler::configuration);
}

namespace {

// Build one side (or the cross) of a lift from `count` permutations of [n],
// assigning images sequentially among admissible choices. Returns false on
// a dead end.
bool lift_permutations(int n, int count, bool within_side, int offset, Rng& rng,
                       std::unordered_set<std::uint64_t>& seen, std::vector<Edge>& edges, int key_span) {
    for (int p = 0; p < count; ++p) {
        std::vector<int> unused(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) unused[i] = i;
        for (int i = 0; i < n; ++i) {
            int chosen = -1;
            auto admissible = [&](int img) {
                if (within_side) {
                    if (img == i) return false; // fixed point lifts to a loop
                    return !seen.count(edge_key(offset + i, offset + img, key_span));
                }
                return !seen.count(edge_key(i, n + img, key_span));
            };
            for (int probe = 0; probe < 32 && chosen < 0; ++probe) {
                std::size_t k = static_cast<std::size_t>(rng.below(unused.size()));
                if (admissible(unused[k])) {
                    chosen = static_cast<int>(k);
                }
            }
            if (chosen < 0) {
                std::vector<int> candidates;
                for (std::size_t k = 0; k < unused.size(); ++k)
                    if (admissible(unused[k])) candidates.push_back(static_cast<int>(k));
                if (candidates.empty()) return false;
                chosen = candidates[rng.below(candidates.size())];
            }
            int img = unused[static_cast<std::size_t>(chosen)];
            unused[static_cast<std::size_t>(chosen)] = unused.back();
            unused.pop_back();
            if (within_side) {
                seen.insert(edge_key(offset + i, offset + img, key_span));
                edges.emplace_back(std::min(offset + i, offset + img), std::max(offset + i, offset + img));
            } else {
                seen.insert(edge_key(i, n + img, key_span));
                edges.emplace_back(i, n + img);
            }
        }
    }
    return true;
}

} // namespace

PlantedInstance sample_lift(const RsbmParams& params, std::uint64_t seed, long max_rejects) {
    if (params.n <= 0) throw ValidationError("n must be positive");
    if (params.d1 < 2 || params.d1 % 2 != 0)
        throw ValidationError("permutation sampler requires even d1 >= 2 (each within-side loop of the base "
                              "multigraph lifts to one permutation)");
    if (params.d2 < 1) throw ValidationError("d2 >= 1 required");

    const int n = params.n;
    Rng rng = Rng::stream(seed, kStreamSideA);
    for (long attempt = 0; attempt <= max_rejects; ++attempt) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<Edge> side_a_edges, side_b_edges, cross_edges;
        bool ok = lift_permutations(n, params.d1 / 2, true, 0, rng, seen, side_a_edges, 2 * n) &&
                  lift_permutations(n, params.d1 / 2, true, n, rng, seen, side_b_edges, 2 * n) &&
                  lift_permutations(n, params.d2, false, 0, rng, seen, cross_edges, 2 * n);
        if (!ok) continue;
        // shift side-b edges back to local indices for compose_rsbm
        for (auto& [u, v] : side_b_edges) {
            u -= n;
            v -= n;
        }
        Graph side_a = Graph::from_edges(n, side_a_edges);
        Graph side_b = Graph::from_edges(n, side_b_edges);
        Graph cross = Graph::from_edges(2 * n, cross_edges);
        return compose_rsbm(params, side_a, side_b, cross, seed, Sampler::permutation);
    }
    throw SamplingError("lift sampler found no simple lift", max_rejects + 1);
}

InstanceAudit validate_instance(const PlantedInstance& inst) {
    InstanceAudit audit;
    const Graph& g = inst.graph;
    const int n = inst.params.n;

    for (auto& v : g.audit()) audit.violations.push_back("graph: " + v);
    if (g.num_vertices() != 2 * n)
        audit.violations.push_back("vertex count != 2n");
    if (inst.labels.size() != g.num_vertices()) {
        audit.violations.push_back("label vector length mismatch");
        return audit;
    }

    int plus = 0;
    for (int v = 0; v < inst.labels.size(); ++v)
        if (inst.labels[v] == 1) ++plus;
    if (plus != n) audit.violations.push_back("label balance: " + std::to_string(plus) + " of " +
                                              std::to_string(g.num_vertices()) + " vertices labeled +1");

    const int d_total = inst.params.d1 + inst.params.d2;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != d_total) {
            audit.violations.push_back("degree regularity: vertex " + std::to_string(v) + " has degree " +
                                       std::to_string(g.degree(v)) + " != " + std::to_string(d_total));
            continue;
        }
        int same = 0;
        for (int w : g.neighbors(v))
            if (inst.labels[w] == inst.labels[v]) ++same;
        if (same != inst.params.d1)
            audit.violations.push_back("per-label degree: vertex " + std::to_string(v) + " has " +
                                       std::to_string(same) + " same-label neighbors != d1");
    }
    return audit;
}

} // namespace rsbm
