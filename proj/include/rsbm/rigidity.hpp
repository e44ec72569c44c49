#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsbm/graph.hpp"
#include "rsbm/graphgen.hpp"

namespace rsbm {

// Exhaustive certificates at desk scale. Equipartitions are canonicalized:
// every reported side contains vertex 0 and is sorted, so a side and its
// complement are never both listed.

inline constexpr int kMaxPartitionVertices = 30; // C(29,14) ~ 7.7e7 sides
inline constexpr int kMaxExpansionVertices = 24;

struct PartitionCertificate {
    std::vector<std::vector<int>> valid_partitions; // sides inducing d1-regular halves
    bool is_unique = false; // exactly one, equal to the planted side when given
    long long checked_count = 0;
};

/// Scans every equipartition and keeps those whose two induced sides are
/// both d1-regular.
PartitionCertificate enumerate_regular_partitions(const Graph& g, int d1,
                                                  const Labeling* planted = nullptr);
PartitionCertificate enumerate_regular_partitions(const PlantedInstance& inst);
PartitionCertificate enumerate_regular_partitions_serial(const Graph& g, int d1,
                                                         const Labeling* planted = nullptr);

struct BisectionCertificate {
    long long min_cut = 0;
    std::vector<std::vector<int>> argmin_partitions; // capped at kMaxArgmin
    long long argmin_count = 0;
    std::optional<bool> planted_is_min;
    long long checked_count = 0;
};

inline constexpr int kMaxArgmin = 1000;

/// Exact minimum over all equipartitions of the cross-edge count.
BisectionCertificate min_bisection_bruteforce(const Graph& g, const Labeling* planted = nullptr);
BisectionCertificate min_bisection_bruteforce_serial(const Graph& g, const Labeling* planted = nullptr);

struct MembershipResult {
    bool member = false;
    std::vector<int> witness; // a valid side when member
    long long checked_count = 0;
};

/// True iff some equipartition induces d1-regular sides on a
/// (d1+d2)-regular graph (the cross side is then d2-regular bipartite
/// automatically). A degree mismatch short-circuits to false.
MembershipResult rsbm_membership(const Graph& g, int d1, int d2);

struct ExpansionReport {
    double gamma = 0.0;
    int degree = 0;
    double worst_ratio = 0.0; // min over S of |edge boundary| / (d |S|)
    std::vector<int> worst_set;
    long long violations = 0; // subsets with ratio < gamma/2
    long long checked_subsets = 0;
    bool vacuous = false; // gamma <= 0
};

/// Verifies |boundary(S)| >= (gamma/2) d |S| for every nonempty S with
/// |S| <= N/2 on a d-regular graph.
ExpansionReport edge_expansion_check(const Graph& g, double gamma);
ExpansionReport edge_expansion_check_serial(const Graph& g, double gamma);

} // namespace rsbm
