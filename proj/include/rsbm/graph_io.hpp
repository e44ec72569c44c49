#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rsbm/graph.hpp"
#include "rsbm/graphgen.hpp"

namespace rsbm {

/// Edge-list text format. Header line
///   # rsbm n=<n> d1=<d1> d2=<d2> seed=<seed> sampler=<name>
/// followed by one "u v" pair per line, 0-indexed, u < v, sorted
/// lexicographically. The header is optional on read.
struct EdgeListHeader {
    std::optional<RsbmParams> params;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> sampler;
};

void write_edge_list(const std::string& path, const Graph& g, const EdgeListHeader& header = {});
void write_instance(const std::string& graph_path, const std::string& labels_path,
                    const PlantedInstance& inst);

struct LoadedGraph {
    Graph graph;
    EdgeListHeader header;
};
LoadedGraph read_edge_list(const std::string& path);

/// Labels file: one +1/-1 per line, line i = vertex i.
void write_labels(const std::string& path, const Labeling& labels);
Labeling read_labels(const std::string& path);

} // namespace rsbm
