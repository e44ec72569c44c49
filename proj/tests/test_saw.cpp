#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "oracles.hpp"
#include "rsbm/errors.hpp"
#include "rsbm/graphgen.hpp"
#include "rsbm/model.hpp"
#include "rsbm/saw.hpp"

using namespace rsbm;

namespace {

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("length-1 walks are the adjacency matrix") {
    Graph g = oracle::random_graph(12, 0.4, 2);
    SawMatrix s = build_saw(g, 1);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) CHECK(s.at(i, j) == (g.has_edge(i, j) ? 1 : 0));
}

TEST_CASE("length-2 walks equal A^2 off the diagonal") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = oracle::random_graph(15, 0.3, seed);
        SawMatrix s = build_saw(g, 2);
        auto a = oracle::adjacency_matrix(g);
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 15; ++j) {
                double a2 = 0;
                for (int k = 0; k < 15; ++k) a2 += a[i][k] * a[k][j];
                if (i == j)
                    CHECK(s.at(i, j) == 0);
                else
                    CHECK(static_cast<double>(s.at(i, j)) == a2);
            }
    }
}

TEST_CASE("exhaustive path oracle on small graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = oracle::random_graph(11, 0.35, 100 + seed);
        for (int l = 1; l <= 5; ++l) {
            SawMatrix s = build_saw(g, l);
            auto expected = oracle::saw_counts(g, l);
            for (int i = 0; i < 11; ++i)
                for (int j = 0; j < 11; ++j) CHECK(static_cast<long long>(s.at(i, j)) == expected[i][j]);
        }
    }
}

TEST_CASE("parallel and serial enumeration agree") {
    PlantedInstance inst = sample_rsbm(RsbmParams{50, 6, 3}, 17);
    SawMatrix a = build_saw(inst.graph, 3);
    SawMatrix b = build_saw_serial(inst.graph, 3);
    CHECK(a.counts == b.counts);
    CHECK(a.built_from == b.built_from);
}

TEST_CASE("symmetry and zero diagonal") {
    PlantedInstance inst = sample_rsbm(RsbmParams{40, 4, 3}, 3);
    for (int l = 1; l <= 4; ++l) {
        SawMatrix s = build_saw(inst.graph, l);
        for (int i = 0; i < s.dim; ++i) {
            CHECK(s.at(i, i) == 0);
            for (int j = i + 1; j < s.dim; ++j) CHECK(s.at(i, j) == s.at(j, i));
        }
    }
}

TEST_CASE("tangle audit geometry on cycles and trees") {
    Graph tree = path_graph(9);
    TangleAudit t = tangle_audit(tree, 3);
    CHECK(t.tangle_free);
    CHECK(t.x_count == 0);
    CHECK(static_cast<int>(t.tree_vertices.size()) == 9);

    Graph c10 = cycle_graph(10);
    TangleAudit shallow = tangle_audit(c10, 2);
    CHECK(shallow.x_count == 0); // every ball is a path
    CHECK(shallow.tangle_free);
    TangleAudit deep = tangle_audit(c10, 5);
    CHECK(deep.tangle_free); // exactly one cycle per ball
    CHECK(deep.x_count == 10);
    for (int e : deep.excess_per_vertex) CHECK(e == 1);

    TangleAudit serial = tangle_audit_serial(c10, 5);
    CHECK(serial.excess_per_vertex == deep.excess_per_vertex);

    TangleAudit trivial = tangle_audit(c10, 0);
    CHECK(trivial.tangle_free);
    CHECK(trivial.x_count == 0);
}

TEST_CASE("audit at the theory depth formula is clean") {
    // largest l with l*ln(12) < ln(2n)/4 is 0 at these sizes: the asymptotic
    // depth regime is out of reach on desk-scale graphs, and the audit at
    // that depth is trivially clean
    const double formula = std::log(2000.0) / (4.0 * std::log(12.0));
    const int l = static_cast<int>(formula);
    CHECK(l == 0);
    const double x_bound = std::pow(2000.0, 0.25);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        PlantedInstance inst = sample_rsbm(RsbmParams{1000, 10, 2}, seed);
        TangleAudit audit = tangle_audit(inst.graph, l);
        CHECK(audit.tangle_free);
        CHECK(static_cast<double>(audit.x_count) <= x_bound);
    }
}

TEST_CASE("all-tree graphs give the boundary quadratic form") {
    Graph c20 = cycle_graph(20);
    TangleAudit audit = tangle_audit(c20, 4);
    CHECK(static_cast<int>(audit.tree_vertices.size()) == 20);
    SawMatrix s = build_saw(c20, 4);
    Labeling alternating(std::vector<std::int8_t>(20, 1));
    QuadraticForms f = saw_quadratic_forms(s, alternating);
    CHECK(f.ee_form == 2.0); // d (d-1)^(l-1) with d = 2
}

TEST_CASE("tangle-free depth bounds the entries by 2") {
    Graph c10 = cycle_graph(10);
    SawMatrix s = build_saw(c10, 5);
    std::int32_t max_entry = 0;
    for (auto v : s.counts) max_entry = std::max(max_entry, v);
    CHECK(max_entry == 2); // antipodal pairs are joined both ways around
}

TEST_CASE("row sums at tree vertices count the ball boundary") {
    // 3-regular graph at depth 3: boundary size 3 * 2^2
    Graph g = sample_regular(200, 3, 21);
    TangleAudit audit = tangle_audit(g, 3);
    REQUIRE(!audit.tree_vertices.empty());
    SawMatrix s = build_saw(g, 3);
    for (int v : audit.tree_vertices) CHECK(s.row_sum(v) == 12);
}

TEST_CASE("signed row sums at tree vertices follow the z sequence") {
    PlantedInstance inst = sample_rsbm(RsbmParams{1000, 3, 3}, 5);
    TangleAudit audit = tangle_audit(inst.graph, 2);
    REQUIRE(!audit.tree_vertices.empty()); // a few percent of vertices at this size
    SawMatrix s = build_saw(inst.graph, 2);
    auto z = z_sequence(3, 3, 2); // z_2 = -6
    for (int v : audit.tree_vertices) {
        CHECK(s.row_sum(v) == 30); // 6 * 5
        std::int64_t signed_sum = 0;
        for (int j = 0; j < s.dim; ++j) signed_sum += static_cast<std::int64_t>(s.at(v, j)) * inst.labels[j];
        CHECK(signed_sum == static_cast<long long>(z[1]) * inst.labels[v]);
    }
}

TEST_CASE("quadratic forms at depth 1 read off the degrees") {
    PlantedInstance inst = sample_rsbm(RsbmParams{80, 10, 2}, 12);
    SawMatrix s = build_saw(inst.graph, 1);
    QuadraticForms f = saw_quadratic_forms(s, inst.labels);
    CHECK(f.ee_form == 12.0);
    CHECK(f.ss_form == 8.0);
}

TEST_CASE("walk-matrix second vector tracks the planted signs") {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        PlantedInstance inst = sample_rsbm(RsbmParams{300, 10, 2}, 40 + seed);
        SolveOptions opts;
        opts.tolerance = 1e-8;
        opts.seed = seed;
        SawSpectrum spec = saw_recover(inst.graph, 4, opts);
        int agree = 0;
        for (int v = 0; v < inst.graph.num_vertices(); ++v)
            if ((spec.second.vector[v] >= 0 ? 1 : -1) == inst.labels[v]) ++agree;
        const int matches = std::max(agree, inst.graph.num_vertices() - agree);
        CHECK(matches >= static_cast<int>(0.95 * inst.graph.num_vertices()));
    }
}

TEST_CASE("depth-1 recovery matches the adjacency eigenvalue") {
    PlantedInstance inst = sample_rsbm(RsbmParams{150, 10, 2}, 31);
    SolveOptions opts;
    opts.seed = 8;
    SawSpectrum spec = saw_recover(inst.graph, 1, opts);
    CHECK(std::abs(spec.second.value - 8.0) < 1e-6);
    CHECK(spec.leading.value == doctest::Approx(12.0).epsilon(1e-9));
}

TEST_CASE("work budget is enforced") {
    PlantedInstance inst = sample_rsbm(RsbmParams{300, 10, 2}, 1);
    CHECK_THROWS_AS(build_saw(inst.graph, 12), ResourceError);
    CHECK_THROWS_AS(build_saw(inst.graph, 0), ValidationError);
}

TEST_CASE("default depth formula") {
    CHECK(default_saw_depth(10, 2, 600) == 1);    // formula value 0, clamped
    CHECK(default_saw_depth(3, 1, 262144) == 2);  // 2 ln4 < ln(4^9)/4 = 2.25 ln4
}

TEST_CASE("matrix-market round trip") {
    PlantedInstance inst = sample_rsbm(RsbmParams{20, 4, 3}, 2);
    SawMatrix s = build_saw(inst.graph, 2);
    const std::string path = "saw_roundtrip_test.mtx";
    write_saw_matrix(path, s);
    SawMatrix r = read_saw_matrix(path);
    CHECK(r.l == s.l);
    CHECK(r.dim == s.dim);
    CHECK(r.counts == s.counts);
    CHECK(r.built_from == s.built_from);
    std::remove(path.c_str());
}
