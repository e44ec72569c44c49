#include "rsbm/graph.hpp"

#include <algorithm>

#include "rsbm/errors.hpp"

namespace rsbm {

Graph Graph::from_edges(int num_vertices, const std::vector<Edge>& edges) {
    if (num_vertices < 0) throw ValidationError("num_vertices must be nonnegative");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(num_vertices), {});
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices)
            throw ValidationError("edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b) throw ValidationError("self-loop at vertex " + std::to_string(a));
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw ValidationError("repeated edge in input");
    }
    g.num_edges_ = static_cast<int>(edges.size());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<int> Graph::regular_degree() const {
    if (adj_.empty()) return 0;
    int d = degree(0);
    for (int v = 1; v < num_vertices(); ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(num_edges_));
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::string> Graph::audit() const {
    std::vector<std::string> violations;
    for (int u = 0; u < num_vertices(); ++u) {
        const auto& nbrs = adj_[u];
        if (!std::is_sorted(nbrs.begin(), nbrs.end()))
            violations.push_back("adjacency[" + std::to_string(u) + "] not sorted");
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            violations.push_back("repeated neighbor at vertex " + std::to_string(u));
        for (int v : nbrs) {
            if (v == u) violations.push_back("self-loop at vertex " + std::to_string(u));
            else if (v < 0 || v >= num_vertices())
                violations.push_back("neighbor out of range at vertex " + std::to_string(u));
            else if (!has_edge(v, u))
                violations.push_back("asymmetric edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
    }
    return violations;
}

Labeling::Labeling(std::vector<std::int8_t> s) : signs(std::move(s)) {
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] != 1 && signs[i] != -1)
            throw ValidationError("label at vertex " + std::to_string(i) + " is not +1/-1");
}

Labeling Labeling::flipped() const {
    Labeling out = *this;
    for (auto& s : out.signs) s = static_cast<std::int8_t>(-s);
    return out;
}

} // namespace rsbm
