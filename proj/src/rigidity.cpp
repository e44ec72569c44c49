#include "rsbm/rigidity.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rsbm/errors.hpp"

namespace rsbm {
namespace {

// binomial table up to 32
struct BinomTable {
    long long c[33][33] = {};
    BinomTable() {
        for (int n = 0; n <= 32; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
    long long operator()(int n, int k) const { return (n < 0 || k < 0 || k > n) ? 0 : c[n][k]; }
};
const BinomTable binom;

// lexicographic rank -> k-combination of {0..m-1}
std::vector<int> unrank_combination(long long rank, int m, int k) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    int c = 0;
    for (int idx = 0; idx < k; ++idx) {
        while (binom(m - 1 - c, k - 1 - idx) <= rank) {
            rank -= binom(m - 1 - c, k - 1 - idx);
            ++c;
        }
        comb[idx] = c++;
    }
    return comb;
}

// Incrementally maintained side V of an equipartition. Tracks, for a target
// inside-degree d1, how many vertices on each side currently meet it, plus
// the cross cut.
class PartitionState {
public:
    PartitionState(const Graph& g, int d1) : g_(g), d1_(d1) {
        const int n = g.num_vertices();
        in_v_.assign(static_cast<std::size_t>(n), 0);
        deg_in_.assign(static_cast<std::size_t>(n), 0);
        ok_outside_ = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == d1_) ++ok_outside_; // deg_in == 0 everywhere
    }

    void add(int u) {
        if (g_.degree(u) - deg_in_[u] == d1_) --ok_outside_;
        cut_ += g_.degree(u) - 2LL * deg_in_[u];
        in_v_[u] = 1;
        ++size_;
        if (deg_in_[u] == d1_) ++ok_inside_;
        bump_neighbors(u, +1);
    }

    void remove(int u) {
        bump_neighbors(u, -1);
        if (deg_in_[u] == d1_) --ok_inside_;
        in_v_[u] = 0;
        --size_;
        cut_ -= g_.degree(u) - 2LL * deg_in_[u];
        if (g_.degree(u) - deg_in_[u] == d1_) ++ok_outside_;
    }

    bool regular_sides() const {
        return ok_inside_ == size_ && ok_outside_ == g_.num_vertices() - size_;
    }
    long long cut() const { return cut_; }

    std::vector<int> side() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size_));
        for (int v = 0; v < g_.num_vertices(); ++v)
            if (in_v_[v]) out.push_back(v);
        return out;
    }

private:
    void bump_neighbors(int u, int delta) {
        for (int w : g_.neighbors(u)) {
            if (in_v_[w]) {
                if (deg_in_[w] == d1_) --ok_inside_;
            } else {
                if (g_.degree(w) - deg_in_[w] == d1_) --ok_outside_;
            }
            deg_in_[w] += delta;
            if (in_v_[w]) {
                if (deg_in_[w] == d1_) ++ok_inside_;
            } else {
                if (g_.degree(w) - deg_in_[w] == d1_) ++ok_outside_;
            }
        }
    }

    const Graph& g_;
    int d1_;
    std::vector<std::uint8_t> in_v_;
    std::vector<int> deg_in_;
    long ok_inside_ = 0;
    long ok_outside_ = 0;
    long long cut_ = 0;
    int size_ = 0;
};

// Walks a rank range of equipartitions (vertex 0 pinned inside, the other
// n-1 side members drawn from {1..N-1} in lexicographic order).
class EquipartitionScanner {
public:
    EquipartitionScanner(const Graph& g, int d1, long long start_rank, long long count)
        : state_(g, d1), remaining_(count), m_(g.num_vertices() - 1),
          k_(g.num_vertices() / 2 - 1) {
        comb_ = unrank_combination(start_rank, m_, k_);
        state_.add(0);
        for (int c : comb_) state_.add(c + 1);
    }

    const PartitionState& state() const { return state_; }

    // moves to the lexicographic successor; false when the range is used up
    bool advance() {
        if (--remaining_ <= 0) return false;
        int i = k_ - 1;
        while (i >= 0 && comb_[i] == m_ - k_ + i) --i;
        if (i < 0) return false;
        for (int j = k_ - 1; j >= i; --j) state_.remove(comb_[j] + 1);
        ++comb_[i];
        for (int j = i + 1; j < k_; ++j) comb_[j] = comb_[i] + (j - i);
        for (int j = i; j < k_; ++j) state_.add(comb_[j] + 1);
        return true;
    }

private:
    PartitionState state_;
    long long remaining_;
    int m_;
    int k_;
    std::vector<int> comb_;
};

void check_partition_budget(const Graph& g) {
    const int n = g.num_vertices();
    if (n < 2 || n % 2 != 0) throw ValidationError("equipartition scan requires an even vertex count >= 2");
    if (n > kMaxPartitionVertices)
        throw ResourceError("equipartition scan limited to " + std::to_string(kMaxPartitionVertices) +
                                " vertices (got " + std::to_string(n) + ")",
                            static_cast<double>(binom(n - 1, n / 2 - 1)));
}

std::vector<int> planted_side(const Labeling& labels) {
    std::vector<int> side;
    for (int v = 0; v < labels.size(); ++v)
        if (labels[v] == labels[0]) side.push_back(v);
    return side;
}

struct RankChunk {
    long long start;
    long long count;
};

std::vector<RankChunk> rank_chunks(long long total, int pieces) {
    std::vector<RankChunk> chunks;
    const long long base = total / pieces;
    long long start = 0;
    for (int i = 0; i < pieces; ++i) {
        long long count = base + (i < total % pieces ? 1 : 0);
        if (count > 0) chunks.push_back({start, count});
        start += count;
    }
    return chunks;
}

int scan_pieces(long long total) {
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    if (total < 4096) return 1;
    return std::max(1, threads);
}

PartitionCertificate enumerate_regular_partitions_impl(const Graph& g, int d1, const Labeling* planted,
                                                       bool parallel) {
    check_partition_budget(g);
    const long long total = binom(g.num_vertices() - 1, g.num_vertices() / 2 - 1);
    const auto chunks = rank_chunks(total, parallel ? scan_pieces(total) : 1);
    std::vector<std::vector<std::vector<int>>> found(chunks.size());

#pragma omp parallel for schedule(static, 1) if (parallel)
    for (std::size_t c = 0; c < chunks.size(); ++c) {
        EquipartitionScanner scan(g, d1, chunks[c].start, chunks[c].count);
        do {
            if (scan.state().regular_sides()) found[c].push_back(scan.state().side());
        } while (scan.advance());
    }

    PartitionCertificate cert;
    cert.checked_count = total;
    for (auto& part : found)
        for (auto& side : part) cert.valid_partitions.push_back(std::move(side));
    cert.is_unique = cert.valid_partitions.size() == 1 &&
                     (!planted || cert.valid_partitions.front() == planted_side(*planted));
    return cert;
}

BisectionCertificate min_bisection_impl(const Graph& g, const Labeling* planted, bool parallel) {
    check_partition_budget(g);
    const long long total = binom(g.num_vertices() - 1, g.num_vertices() / 2 - 1);
    const auto chunks = rank_chunks(total, parallel ? scan_pieces(total) : 1);

    struct Local {
        long long min_cut = -1;
        std::vector<std::vector<int>> argmins;
        long long argmin_count = 0;
    };
    std::vector<Local> locals(chunks.size());

#pragma omp parallel for schedule(static, 1) if (parallel)
    for (std::size_t c = 0; c < chunks.size(); ++c) {
        Local& loc = locals[c];
        EquipartitionScanner scan(g, -1, chunks[c].start, chunks[c].count);
        do {
            const long long cut = scan.state().cut();
            if (loc.min_cut < 0 || cut < loc.min_cut) {
                loc.min_cut = cut;
                loc.argmins.clear();
                loc.argmin_count = 0;
            }
            if (cut == loc.min_cut) {
                ++loc.argmin_count;
                if (static_cast<int>(loc.argmins.size()) < kMaxArgmin)
                    loc.argmins.push_back(scan.state().side());
            }
        } while (scan.advance());
    }

    BisectionCertificate cert;
    cert.checked_count = total;
    bool initialized = false;
    for (const auto& loc : locals)
        if (loc.min_cut >= 0 && (!initialized || loc.min_cut < cert.min_cut)) {
            cert.min_cut = loc.min_cut;
            initialized = true;
        }
    for (auto& loc : locals)
        if (loc.min_cut == cert.min_cut) {
            cert.argmin_count += loc.argmin_count;
            for (auto& side : loc.argmins)
                if (static_cast<int>(cert.argmin_partitions.size()) < kMaxArgmin)
                    cert.argmin_partitions.push_back(std::move(side));
        }
    if (planted) {
        // cut of the planted side
        long long cut = 0;
        for (int v = 0; v < g.num_vertices(); ++v)
            for (int w : g.neighbors(v))
                if (v < w && (*planted)[v] != (*planted)[w]) ++cut;
        cert.planted_is_min = cut == cert.min_cut;
    }
    return cert;
}

} // namespace

PartitionCertificate enumerate_regular_partitions(const Graph& g, int d1, const Labeling* planted) {
    return enumerate_regular_partitions_impl(g, d1, planted, true);
}

PartitionCertificate enumerate_regular_partitions_serial(const Graph& g, int d1, const Labeling* planted) {
    return enumerate_regular_partitions_impl(g, d1, planted, false);
}

PartitionCertificate enumerate_regular_partitions(const PlantedInstance& inst) {
    return enumerate_regular_partitions(inst.graph, inst.params.d1, &inst.labels);
}

BisectionCertificate min_bisection_bruteforce(const Graph& g, const Labeling* planted) {
    return min_bisection_impl(g, planted, true);
}

BisectionCertificate min_bisection_bruteforce_serial(const Graph& g, const Labeling* planted) {
    return min_bisection_impl(g, planted, false);
}

MembershipResult rsbm_membership(const Graph& g, int d1, int d2) {
    MembershipResult result;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != d1 + d2) return result; // degree mismatch short-circuits
    check_partition_budget(g);
    const long long total = binom(g.num_vertices() - 1, g.num_vertices() / 2 - 1);
    const auto chunks = rank_chunks(total, scan_pieces(total));

    std::atomic<long long> best_rank{total};
    std::vector<std::vector<int>> witnesses(chunks.size());

#pragma omp parallel for schedule(static, 1)
    for (std::size_t c = 0; c < chunks.size(); ++c) {
        if (chunks[c].start > best_rank.load(std::memory_order_relaxed)) continue;
        EquipartitionScanner scan(g, d1, chunks[c].start, chunks[c].count);
        long long rank = chunks[c].start;
        long steps = 0;
        do {
            if (scan.state().regular_sides()) {
                witnesses[c] = scan.state().side();
                long long expected = best_rank.load(std::memory_order_relaxed);
                while (rank < expected && !best_rank.compare_exchange_weak(expected, rank)) {
                }
                break;
            }
            ++rank;
            if ((++steps & 0xfff) == 0 && chunks[c].start > best_rank.load(std::memory_order_relaxed))
                break;
        } while (scan.advance());
    }

    result.checked_count = total;
    long long best = best_rank.load();
    if (best < total) {
        // deterministic winner: the lowest-rank witness
        for (std::size_t c = 0; c < chunks.size(); ++c) {
            if (!witnesses[c].empty() && chunks[c].start <= best && best < chunks[c].start + chunks[c].count) {
                result.member = true;
                result.witness = witnesses[c];
                break;
            }
        }
    }
    return result;
}

namespace {

ExpansionReport expansion_impl(const Graph& g, double gamma, bool parallel) {
    const int n = g.num_vertices();
    if (n > kMaxExpansionVertices)
        throw ResourceError("edge expansion scan limited to " + std::to_string(kMaxExpansionVertices) +
                                " vertices (got " + std::to_string(n) + ")",
                            std::ldexp(1.0, n));
    const auto d = g.regular_degree();
    if (!d || *d == 0) throw ValidationError("edge_expansion_check requires a regular graph of degree >= 1");

    ExpansionReport report;
    report.gamma = gamma;
    report.degree = *d;
    report.vacuous = gamma <= 0.0;
    report.worst_ratio = std::numeric_limits<double>::infinity();

    int prefix_bits = 0;
    if (parallel && n > 12) {
#ifdef _OPENMP
        while ((1 << prefix_bits) < omp_get_max_threads() && prefix_bits < n - 10) ++prefix_bits;
#endif
    }
    const int low_bits = n - prefix_bits;
    const long long prefixes = 1LL << prefix_bits;
    const double threshold = gamma / 2.0;

    struct Local {
        double worst = std::numeric_limits<double>::infinity();
        std::uint32_t worst_mask = 0;
        long long violations = 0;
        long long checked = 0;
    };
    std::vector<Local> locals(static_cast<std::size_t>(prefixes));

#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long long p = 0; p < prefixes; ++p) {
        Local& loc = locals[static_cast<std::size_t>(p)];
        std::uint32_t mask = static_cast<std::uint32_t>(p) << low_bits;
        std::vector<std::uint8_t> in_s(static_cast<std::size_t>(n), 0);
        int size = 0;
        long long cut = 0;
        auto flip = [&](int v) {
            int in_nbrs = 0;
            for (int w : g.neighbors(v))
                if (in_s[w]) ++in_nbrs;
            if (!in_s[v]) {
                in_s[v] = 1;
                ++size;
                cut += g.degree(v) - 2LL * in_nbrs;
            } else {
                in_s[v] = 0;
                --size;
                cut -= g.degree(v) - 2LL * in_nbrs;
            }
        };
        for (int v = low_bits; v < n; ++v)
            if (mask & (1u << v)) flip(v);
        auto visit = [&]() {
            if (size < 1 || 2 * size > n) return;
            ++loc.checked;
            const double ratio = static_cast<double>(cut) / (static_cast<double>(*d) * size);
            if (ratio < loc.worst) {
                loc.worst = ratio;
                loc.worst_mask = mask;
            }
            if (ratio < threshold - 1e-12) ++loc.violations;
        };
        visit();
        const std::uint64_t steps = 1ULL << low_bits;
        for (std::uint64_t i = 1; i < steps; ++i) {
            const int bit = std::countr_zero(i);
            flip(bit);
            mask ^= (1u << bit);
            visit();
        }
    }

    for (const auto& loc : locals) {
        report.checked_subsets += loc.checked;
        report.violations += loc.violations;
        if (loc.worst < report.worst_ratio) {
            report.worst_ratio = loc.worst;
            report.worst_set.clear();
            for (int v = 0; v < n; ++v)
                if (loc.worst_mask & (1u << v)) report.worst_set.push_back(v);
        }
    }
    return report;
}

} // namespace

ExpansionReport edge_expansion_check(const Graph& g, double gamma) {
    return expansion_impl(g, gamma, true);
}

ExpansionReport edge_expansion_check_serial(const Graph& g, double gamma) {
    return expansion_impl(g, gamma, false);
}

} // namespace rsbm
