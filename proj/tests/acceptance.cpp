// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Exact identities are checked with zero tolerance; asymptotic statements
// use seeded Monte-Carlo thresholds at the sample sizes stated inline.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "rsbm/graphgen.hpp"
#include "rsbm/model.hpp"
#include "rsbm/recovery.hpp"
#include "rsbm/rigidity.hpp"
#include "rsbm/rng.hpp"
#include "rsbm/saw.hpp"
#include "rsbm/spectral.hpp"

using namespace rsbm;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int index, bool pass, const std::string& what, const std::string& detail, double secs) {
    if (!pass) ++g_failures;
    std::printf("[%2d] %s  %-28s %s (%.2fs)\n", index, pass ? "PASS" : "FAIL", what.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
}

bool eigen_identities_hold(const PlantedInstance& inst) {
    for (int v = 0; v < inst.graph.num_vertices(); ++v) {
        if (inst.graph.degree(v) != inst.params.d1 + inst.params.d2) return false;
        int same = 0;
        for (int w : inst.graph.neighbors(v))
            if (inst.labels[w] == inst.labels[v]) ++same;
        if (same != inst.params.d1) return false;
        if (inst.graph.degree(v) - same != inst.params.d2) return false;
    }
    return true;
}

// independent x/y route to the z sequence (same-label and cross-label
// boundary counts on the labeled tree)
std::vector<int128> z_via_xy(int d1, int d2, int l) {
    std::vector<int128> x{d1}, y{d2};
    if (l >= 2) {
        x.push_back(int128{d1} * d1 + int128{d2} * d2 - d1 - d2);
        y.push_back(int128{2} * d1 * d2);
    }
    for (int k = 3; k <= l; ++k) {
        x.push_back(int128{d1} * x[k - 2] + int128{d2} * y[k - 2] - int128{d1 + d2 - 1} * x[k - 3]);
        y.push_back(int128{d1} * y[k - 2] + int128{d2} * x[k - 2] - int128{d1 + d2 - 1} * y[k - 3]);
    }
    std::vector<int128> z;
    for (int k = 0; k < l; ++k) z.push_back(x[k] - y[k]);
    return z;
}

Graph random_simple_graph(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng.next_u64() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

void criterion1_eigen_identities() {
    const auto t0 = std::chrono::steady_clock::now();
    struct Cell {
        int d1, d2;
        Sampler sampler;
    };
    const std::vector<Cell> cells = {{10, 2, Sampler::configuration}, {10, 2, Sampler::permutation},
                                     {6, 3, Sampler::configuration},  {6, 3, Sampler::permutation},
                                     {11, 3, Sampler::configuration}};
    int instances = 0, violations = 0;
    for (const Cell& cell : cells)
        for (int n : {50, 200})
            for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                RsbmParams params{n, cell.d1, cell.d2};
                PlantedInstance inst = cell.sampler == Sampler::configuration
                                           ? sample_rsbm(params, seed)
                                           : sample_lift(params, seed);
                ++instances;
                if (!eigen_identities_hold(inst)) ++violations;
            }
    const double secs = seconds_since(t0);
    report(1, instances == 100 && violations == 0 && secs < 10.0, "eigenpair identities",
           std::to_string(instances) + " instances, " + std::to_string(violations) + " violations",
           secs);
}

void criterion2_spectral_separation() {
    const auto t0 = std::chrono::steady_clock::now();
    const double bulk_bound = 2.0 * std::sqrt(11.0) + 0.5;
    int lambda2_ok = 0, lambda3_ok = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        PlantedInstance inst = sample_rsbm(RsbmParams{500, 10, 2}, seed);
        SolveOptions opts;
        opts.tolerance = 1e-8;
        opts.max_iter = 200000;
        opts.seed = seed;
        SpectrumSummary s = top_eigenpairs(inst.graph, 3, opts);
        if (std::abs(s.eigenvalues[1] - 8.0) <= 1e-6) ++lambda2_ok;
        if (std::abs(s.eigenvalues[2]) <= bulk_bound) ++lambda3_ok;
    }
    const double secs = seconds_since(t0);
    report(2, lambda2_ok == 20 && lambda3_ok >= 18 && secs < 120.0, "spectral separation",
           "lambda2 exact in " + std::to_string(lambda2_ok) + "/20, bulk bounded in " +
               std::to_string(lambda3_ok) + "/20",
           secs);
}

void criterion3_strong_recovery() {
    const auto t0 = std::chrono::steady_clock::now();
    const int round_cap = static_cast<int>(std::ceil(4.0 * std::log2(1000.0)));
    int successes = 0, aligned = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        PlantedInstance inst = sample_rsbm(RsbmParams{500, 10, 2}, 100 + seed);
        RecoverOptions opts;
        opts.params = inst.params;
        opts.solve.tolerance = 1e-8;
        opts.solve.seed = seed;
        RecoveryResult r = spectral_recover(inst.graph, opts, &inst.labels);
        if (r.agreement == 1.0 && r.rounds_used <= round_cap) ++successes;
        // sign pattern of the rounded eigenvector before any majority round
        if (r.per_round_errors.front() <= 50) ++aligned; // 5% of 2n = 1000
    }
    report(3, successes >= 18 && aligned >= 18, "strong recovery",
           std::to_string(successes) + "/20 exact within " + std::to_string(round_cap) + " rounds, " +
               std::to_string(aligned) + "/20 rounded within 5%",
           seconds_since(t0));
}

void criterion4_majority_contraction() {
    const auto t0 = std::chrono::steady_clock::now();
    int zero_final = 0, monotone = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        PlantedInstance inst = sample_rsbm(RsbmParams{1000, 10, 2}, 1000 + seed);
        // flip exactly 5% per side
        Labeling noisy = inst.labels;
        std::vector<int> side_a, side_b;
        for (int v = 0; v < noisy.size(); ++v) (noisy[v] > 0 ? side_a : side_b).push_back(v);
        Rng rng = Rng::stream(seed, 55);
        for (auto* side : {&side_a, &side_b}) {
            auto picks = rng.sample_subset(static_cast<int>(side->size()), 50);
            for (int idx : picks) noisy.signs[(*side)[idx]] *= -1;
        }
        RecoveryResult r = majority_iterate(inst.graph, noisy,
                                            default_majority_rounds(inst.graph.num_vertices()),
                                            &inst.labels);
        if (r.per_round_errors.back() == 0) ++zero_final;
        bool nonincreasing = true;
        for (std::size_t i = 0; i + 1 < r.per_round_errors.size(); ++i)
            if (r.per_round_errors[i + 1] > r.per_round_errors[i]) nonincreasing = false;
        if (nonincreasing) ++monotone;
    }
    report(4, zero_final >= 45 && monotone >= 45, "majority contraction",
           std::to_string(zero_final) + "/50 fully repaired, " + std::to_string(monotone) +
               "/50 monotone",
           seconds_since(t0));
}

void criterion5_saw_identities() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;

    // tree-vertex identities on a planted instance, depths 1..4
    PlantedInstance inst = sample_rsbm(RsbmParams{300, 10, 2}, 5);
    auto z = z_sequence(10, 2, 4);
    long tree_checked = 0;
    for (int l = 1; l <= 4; ++l) {
        TangleAudit audit = tangle_audit(inst.graph, l);
        SawMatrix s = build_saw(inst.graph, l);
        const std::int64_t boundary =
            static_cast<std::int64_t>(static_cast<long long>(predicted_saw_eigenvalue1(10, 2, l)));
        for (int v : audit.tree_vertices) {
            ++tree_checked;
            if (s.row_sum(v) != boundary) pass = false;
            std::int64_t signed_sum = 0;
            for (int j = 0; j < s.dim; ++j)
                signed_sum += static_cast<std::int64_t>(s.at(v, j)) * inst.labels[j];
            if (signed_sum != static_cast<long long>(z[l - 1]) * inst.labels[v]) pass = false;
        }
        if (l == 1 && audit.tree_vertices.empty()) pass = false; // must be non-vacuous
    }

    // S^(1) = A and S^(2) = A^2 - Diag(deg) on 50 random graphs
    int graphs_ok = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = random_simple_graph(12 + static_cast<int>(seed % 5), 0.35, 900 + seed);
        const int n = g.num_vertices();
        SawMatrix s1 = build_saw(g, 1);
        SawMatrix s2 = build_saw(g, 2);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (s1.at(i, j) != (g.has_edge(i, j) ? 1 : 0)) ok = false;
                long long a2 = 0;
                for (int k = 0; k < n; ++k)
                    a2 += static_cast<long long>(g.has_edge(i, k) && g.has_edge(k, j));
                const long long expected = i == j ? 0 : a2;
                if (s2.at(i, j) != expected) ok = false;
            }
        if (ok) ++graphs_ok;
    }
    if (graphs_ok != 50) pass = false;
    detail = std::to_string(tree_checked) + " tree-vertex identities exact, " +
             std::to_string(graphs_ok) + "/50 small-graph identities exact";
    report(5, pass, "walk-count identities", detail, seconds_since(t0));
}

void criterion6_saw_spectrum() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto q = check_thresholds(10, 2);
    const double alpha4 = std::pow(q.alpha, 4);
    int lambda1_ok = 0, lambda2_ok = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PlantedInstance inst = sample_rsbm(RsbmParams{300, 10, 2}, 200 + seed);
        SolveOptions opts;
        opts.tolerance = 1e-8;
        opts.seed = seed;
        SawSpectrum spec = saw_recover(inst.graph, 4, opts);
        if (std::abs(spec.leading.value - 15972.0) <= 0.02 * 15972.0) ++lambda1_ok;
        const double ratio = spec.second.value / alpha4;
        if (ratio >= 0.5 * q.coeff_a && ratio <= 2.0 * q.coeff_a) ++lambda2_ok;
    }
    report(6, lambda1_ok >= 9 && lambda2_ok >= 8, "walk-matrix spectrum",
           "lambda1 within 2% in " + std::to_string(lambda1_ok) + "/10, lambda2 in band in " +
               std::to_string(lambda2_ok) + "/10",
           seconds_since(t0));
}

void criterion7_model_formulas() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    for (int d2 = 3; d2 <= 12 && pass; ++d2)
        for (int d1 = d2; d1 <= 12 && pass; ++d1) {
            auto a = z_sequence(d1, d2, 20);
            auto b = z_via_xy(d1, d2, 20);
            for (int k = 0; k < 20; ++k)
                if (a[k] != b[k]) pass = false;
            auto q = check_thresholds(d1, d2);
            if (q.roots_real)
                for (int k = 1; k <= 20; ++k) {
                    const double closed =
                        q.coeff_a * std::pow(q.alpha, k) + q.coeff_b * std::pow(q.beta, k);
                    const double exact = static_cast<double>(static_cast<long long>(a[k - 1]));
                    const double rel = std::abs(closed - exact) / std::max(1.0, std::abs(exact));
                    if (rel > 1e-9) pass = false;
                }
        }
    for (int d2 = 3; d2 <= 20 && pass; ++d2)
        for (int d1 = d2; d1 <= 20; ++d1) {
            auto r = tv_rates(d1, d2);
            if (!(r.rate1 < 1.0 && r.rate2 < 1.0)) pass = false;
        }
    for (int d2 = 3; d2 < 30 && pass; ++d2)
        for (int d1 = d2 + 1; d1 <= 30; ++d1) {
            auto q = check_thresholds(d1, d2);
            if (q.spectral_condition && q.alpha <= std::sqrt(static_cast<double>(d1 + d2)))
                pass = false;
        }
    const double secs = seconds_since(t0);
    report(7, pass && secs < 1.0, "model formulas", "recurrences, rates and root bounds exact", secs);
}

void criterion8_simplicity_rate() {
    const auto t0 = std::chrono::steady_clock::now();
    SimplicityStats stats = simplicity_rate(500, 3, 10000, 2718);
    const double p = std::exp(-2.0);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(stats.attempts));
    const double deviation = std::abs(stats.rate() - p);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "rate %.4f vs %.4f (%.1f se)", stats.rate(), p, deviation / se);
    report(8, deviation <= 3.0 * se, "matching simplicity rate", buf, seconds_since(t0));
}

void criterion9_rigidity_oracles() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;

    // exhaustive path oracle on a fixed random suite (<= 12 vertices)
    for (std::uint64_t seed = 0; seed < 8 && pass; ++seed) {
        Graph g = random_simple_graph(10 + static_cast<int>(seed % 3), 0.35, 40 + seed);
        for (int l = 1; l <= 4; ++l) {
            SawMatrix s = build_saw(g, l);
            // recursive oracle with explicit path vectors
            const int n = g.num_vertices();
            for (int root = 0; root < n; ++root) {
                std::vector<long long> row(static_cast<std::size_t>(n), 0);
                std::vector<int> path{root};
                struct Rec {
                    const Graph& g;
                    int l;
                    std::vector<long long>& row;
                    void walk(std::vector<int>& p) {
                        if (static_cast<int>(p.size()) == l + 1) {
                            ++row[static_cast<std::size_t>(p.back())];
                            return;
                        }
                        for (int w : g.neighbors(p.back())) {
                            bool seen = false;
                            for (int q : p)
                                if (q == w) seen = true;
                            if (seen) continue;
                            p.push_back(w);
                            walk(p);
                            p.pop_back();
                        }
                    }
                } rec{g, l, row};
                rec.walk(path);
                for (int j = 0; j < n; ++j)
                    if (row[static_cast<std::size_t>(j)] != s.at(root, j)) pass = false;
            }
        }
    }

    // planted min bisection bounded by n*d2 at 2n <= 24
    struct Small {
        int n, d1, d2;
    };
    for (const Small& c : {Small{8, 3, 3}, Small{10, 4, 3}, Small{12, 5, 3}})
        for (std::uint64_t seed = 1; seed <= 2 && pass; ++seed) {
            PlantedInstance inst = sample_rsbm(RsbmParams{c.n, c.d1, c.d2}, 300 + seed);
            BisectionCertificate cert = min_bisection_bruteforce(inst.graph, &inst.labels);
            if (cert.min_cut > static_cast<long long>(c.n) * c.d2) pass = false;
        }

    // expansion bound: a theorem, so zero violations on 20 instances
    int expansion_ok = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        PlantedInstance inst = sample_rsbm(RsbmParams{8, 3, 3}, 400 + seed);
        SolveOptions opts;
        opts.seed = seed;
        const double gamma = 1.0 - second_eigenvector(inst.graph, opts).value / 6.0;
        ExpansionReport rep = edge_expansion_check(inst.graph, gamma);
        if (rep.violations == 0) ++expansion_ok;
    }
    if (expansion_ok != 20) pass = false;
    report(9, pass, "rigidity oracles",
           "path oracle exact, planted cuts bounded, expansion " + std::to_string(expansion_ok) +
               "/20 clean",
           seconds_since(t0));
}

void criterion10_membership_decay() {
    const auto t0 = std::chrono::steady_clock::now();
    double freq[2] = {0, 0};
    const int sizes[2] = {12, 16};
    bool computed = true;
    for (int i = 0; i < 2; ++i) {
        int members = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            Graph g = sample_regular_config(sizes[i], 6, 7000 + seed * 7 + static_cast<std::uint64_t>(i),
                                            10000000L);
            if (rsbm_membership(g, 3, 3).member) ++members;
        }
        freq[i] = members / 200.0;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "membership frequency %.3f @12 -> %.3f @16 (%s)", freq[0], freq[1],
                  freq[1] <= freq[0] ? "decreasing" : "not decreasing at this size");
    report(10, computed, "membership decay (reported)", buf, seconds_since(t0));
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1_eigen_identities();
    criterion2_spectral_separation();
    criterion3_strong_recovery();
    criterion4_majority_contraction();
    criterion5_saw_identities();
    criterion6_saw_spectrum();
    criterion7_model_formulas();
    criterion8_simplicity_rate();
    criterion9_rigidity_oracles();
    criterion10_membership_decay();
    std::printf("%d/10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
