#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsbm/graph.hpp"
#include "rsbm/spectral.hpp"

namespace rsbm {

/// Dense matrix of self-avoiding-walk counts: entry (i,j) is the number of
/// simple paths of length l from i to j. Symmetric with zero diagonal for
/// l >= 1; entries are at most 2 on l-tangle-free graphs.
struct SawMatrix {
    int l = 0;
    int dim = 0;
    std::vector<std::int32_t> counts; // row-major dim x dim
    std::uint64_t built_from = 0;     // graph fingerprint

    std::int32_t at(int i, int j) const { return counts[static_cast<std::size_t>(i) * dim + j]; }
    std::int64_t row_sum(int v) const;
};

std::uint64_t graph_fingerprint(const Graph& g);

inline constexpr double kDefaultSawBudget = 1e8; // path-steps

/// Exact SAW counts by depth-first enumeration of simple paths from every
/// root; parallel over roots. Throws ResourceError when the estimated cost
/// N * max_deg * (max_deg-1)^(l-1) exceeds `budget`.
SawMatrix build_saw(const Graph& g, int l, double budget = kDefaultSawBudget);
SawMatrix build_saw_serial(const Graph& g, int l, double budget = kDefaultSawBudget);

/// Per-vertex cycle census of the radius-l balls. excess(v) is
/// edges - vertices + 1 of the subgraph induced on B_l(v): the number of
/// independent cycles in the ball.
struct TangleAudit {
    int l = 0;
    std::vector<int> excess_per_vertex;
    bool tangle_free = false; // max excess <= 1
    int x_count = 0;          // #vertices whose ball contains a cycle
    std::vector<int> tree_vertices; // excess 0
};

TangleAudit tangle_audit(const Graph& g, int l);
TangleAudit tangle_audit_serial(const Graph& g, int l);

/// e'S e / dim and sigma'S sigma / dim, accumulated in exact integer
/// arithmetic and reported as reals.
struct QuadraticForms {
    double ee_form = 0.0;
    double ss_form = 0.0;
};
QuadraticForms saw_quadratic_forms(const SawMatrix& saw, const Labeling& labels);

LinearOperator saw_operator(const SawMatrix& saw);

/// Leading two eigenpairs of S^(l): the dominant pair (Perron) and the
/// dominant-by-value pair in its complement. The second vector's signs are
/// the weak-recovery labeling.
struct SawSpectrum {
    EigenPair leading;
    EigenPair second;
};
SawSpectrum saw_spectrum(const SawMatrix& saw, const SolveOptions& opts);
SawSpectrum saw_recover(const Graph& g, int l, const SolveOptions& opts,
                        double budget = kDefaultSawBudget);

/// Largest l >= 1 with l*log(d1+d2) < log(num_vertices)/4; returns 1 when
/// no positive l satisfies the inequality (always the case at small sizes).
int default_saw_depth(int d1, int d2, int num_vertices);

/// Matrix-market-style triplet serialization (symmetric coordinate form).
void write_saw_matrix(const std::string& path, const SawMatrix& saw);
SawMatrix read_saw_matrix(const std::string& path);

} // namespace rsbm
