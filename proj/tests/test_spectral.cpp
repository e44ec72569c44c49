#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rsbm/errors.hpp"
#include "rsbm/graphgen.hpp"
#include "rsbm/spectral.hpp"

using namespace rsbm;

namespace {

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    return Graph::from_edges(n, edges);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

TEST_CASE("matvec on a single edge") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    auto y = matvec(g, {1.0, 0.0});
    CHECK(y[0] == 0.0);
    CHECK(y[1] == 1.0);
    CHECK_THROWS_AS(matvec(g, {1.0}), ValidationError);
}

TEST_CASE("matvec eigen identities on a planted instance") {
    PlantedInstance inst = sample_rsbm(RsbmParams{60, 6, 3}, 4);
    const int n = inst.graph.num_vertices();
    std::vector<double> ones(n, 1.0), sigma(n);
    for (int v = 0; v < n; ++v) sigma[v] = inst.labels[v];
    auto ye = matvec(inst.graph, ones);
    auto ys = matvec(inst.graph, sigma);
    for (int v = 0; v < n; ++v) {
        CHECK(ye[v] == 9.0);
        CHECK(ys[v] == 3.0 * sigma[v]);
    }
    CHECK(matvec_serial(inst.graph, sigma) == ys);
}

TEST_CASE("matvec linearity") {
    Graph g = oracle::random_graph(40, 0.2, 5);
    Rng rng(7);
    std::vector<double> x(40), y(40);
    for (auto& v : x) v = rng.symmetric_unit();
    for (auto& v : y) v = rng.symmetric_unit();
    const double a = 0.37, b = -1.25;
    std::vector<double> combo(40);
    for (int i = 0; i < 40; ++i) combo[i] = a * x[i] + b * y[i];
    auto lhs = matvec(g, combo);
    auto mx = matvec(g, x), my = matvec(g, y);
    for (int i = 0; i < 40; ++i) {
        const double rhs = a * mx[i] + b * my[i];
        CHECK(lhs[i] == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("complete graph spectrum") {
    SolveOptions opts;
    SpectrumSummary s = top_eigenpairs(complete_graph(4), 4, opts);
    CHECK(s.analytic_first);
    CHECK(s.eigenvalues[0] == 3.0);
    for (int i = 1; i < 4; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("magnitude ordering on a bipartite spectrum") {
    Graph k33 = sample_bipartite_config(3, 3, 1, 100000);
    SolveOptions opts;
    SpectrumSummary s = top_eigenpairs(k33, 3, opts);
    CHECK(s.eigenvalues[0] == 3.0);
    CHECK(s.eigenvalues[1] == doctest::Approx(-3.0).epsilon(1e-8));
    CHECK(std::abs(s.eigenvalues[2]) < 1e-6);
    for (std::size_t i = 0; i + 1 < s.eigenvalues.size(); ++i)
        CHECK(std::abs(s.eigenvalues[i]) >= std::abs(s.eigenvalues[i + 1]) - 1e-9);
}

TEST_CASE("planted instance: lambda1 exact, lambda2 near d1-d2, bulk below") {
    PlantedInstance inst = sample_rsbm(RsbmParams{500, 10, 2}, 2024);
    SolveOptions opts;
    opts.tolerance = 1e-10;
    opts.seed = 9;
    SpectrumSummary s = top_eigenpairs(inst.graph, 3, opts);
    CHECK(s.eigenvalues[0] == 12.0);
    CHECK(s.residuals[0] < 1e-12);
    CHECK(std::abs(s.eigenvalues[1] - 8.0) < 1e-6);
    CHECK(std::abs(s.eigenvalues[2]) < 8.0);
    CHECK(s.gamma.has_value());
    CHECK(*s.gamma == doctest::Approx(1.0 - 8.0 / 12.0).epsilon(1e-6));

    // deflation correctness: pairwise orthogonality
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(std::abs(dot(s.eigenvectors[i], s.eigenvectors[j])) < 1e-8);

    // Rayleigh consistency on the raw operator
    for (int i = 0; i < 3; ++i) {
        auto mv = matvec(inst.graph, s.eigenvectors[i]);
        CHECK(std::abs(dot(s.eigenvectors[i], mv) - s.eigenvalues[i]) <= 10 * opts.tolerance + 1e-9);
    }
}

TEST_CASE("second eigenvector aligns with the planted labels") {
    PlantedInstance inst = sample_rsbm(RsbmParams{500, 10, 2}, 77);
    SolveOptions opts;
    opts.seed = 3;
    EigenPair pair = second_eigenvector(inst.graph, opts);
    CHECK(std::abs(pair.value - 8.0) < 1e-6);
    const int n = inst.graph.num_vertices();
    std::vector<double> sigma_hat(n);
    for (int v = 0; v < n; ++v) sigma_hat[v] = inst.labels[v] / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(dot(pair.vector, sigma_hat)) > 0.99);
}

TEST_CASE("two disjoint cliques: component indicator") {
    std::vector<Edge> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
            edges.emplace_back(u, v);
            edges.emplace_back(u + 4, v + 4);
        }
    Graph g = Graph::from_edges(8, edges);
    SolveOptions opts;
    EigenPair pair = second_eigenvector(g, opts);
    CHECK(pair.value == doctest::Approx(3.0).epsilon(1e-9));
    // constant per component, opposite signs
    for (int v = 1; v < 4; ++v) CHECK(pair.vector[v] == doctest::Approx(pair.vector[0]).epsilon(1e-6));
    for (int v = 5; v < 8; ++v) CHECK(pair.vector[v] == doctest::Approx(pair.vector[4]).epsilon(1e-6));
    CHECK(pair.vector[0] * pair.vector[4] < 0.0);
}

TEST_CASE("repeated second eigenvalue is detectable") {
    Graph c5 = cycle_graph(5);
    SolveOptions opts;
    SpectrumSummary s = top_eigenpairs(c5, 3, opts);
    auto exact = oracle::jacobi_eigenvalues(oracle::adjacency_matrix(c5));
    CHECK(s.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(s.eigenvalues[1] == doctest::Approx(exact[3]).epsilon(1e-7)); // -1.618..., double
    CHECK(s.eigenvalues[2] == doctest::Approx(exact[4]).epsilon(1e-7));
    CHECK(s.has_degenerate_pair(1e-6));

    EigenPair by_value = second_eigenvector(c5, opts);
    CHECK(by_value.value == doctest::Approx(2.0 * std::cos(2.0 * M_PI / 5.0)).epsilon(1e-7));
}

TEST_CASE("matches the dense oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = oracle::random_graph(14, 0.35, seed);
        auto exact = oracle::jacobi_eigenvalues(oracle::adjacency_matrix(g));
        std::sort(exact.begin(), exact.end(),
                  [](double a, double b) { return std::abs(a) > std::abs(b); });
        SolveOptions opts;
        opts.tolerance = 1e-11;
        opts.seed = seed + 1;
        SpectrumSummary s = top_eigenpairs(g, 3, opts);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(s.eigenvalues[i]) == doctest::Approx(std::abs(exact[i])).epsilon(1e-6));
    }
}
