#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rsbm {

using Edge = std::pair<int, int>; // stored with first < second

/// Immutable undirected simple graph in adjacency-list form.
/// Neighbor lists are sorted; construction rejects loops and repeated edges.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int num_vertices, const std::vector<Edge>& edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return num_edges_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const;

    // degree if every vertex has the same one
    std::optional<int> regular_degree() const;

    // edges sorted lexicographically with u < v
    std::vector<Edge> edges() const;

    // structural audit: symmetry, sortedness, no loops, no duplicates
    std::vector<std::string> audit() const;

private:
    std::vector<std::vector<int>> adj_;
    int num_edges_ = 0;
};

/// One +1/-1 sign per vertex; +1 encodes side A of a bipartition.
struct Labeling {
    std::vector<std::int8_t> signs;

    Labeling() = default;
    explicit Labeling(std::vector<std::int8_t> s);

    int size() const { return static_cast<int>(signs.size()); }
    int operator[](int v) const { return signs[v]; }

    Labeling flipped() const;
    bool operator==(const Labeling&) const = default;
};

} // namespace rsbm
