#include "rsbm/graph_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "rsbm/errors.hpp"

namespace rsbm {

void write_edge_list(const std::string& path, const Graph& g, const EdgeListHeader& header) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    if (header.params) {
        out << "# rsbm n=" << header.params->n << " d1=" << header.params->d1
            << " d2=" << header.params->d2;
        if (header.seed) out << " seed=" << *header.seed;
        if (header.sampler) out << " sampler=" << *header.sampler;
        out << "\n";
    }
    out << "# vertices=" << g.num_vertices() << " edges=" << g.num_edges() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_instance(const std::string& graph_path, const std::string& labels_path,
                    const PlantedInstance& inst) {
    EdgeListHeader header;
    header.params = inst.params;
    header.seed = inst.seed;
    header.sampler = sampler_name(inst.sampler);
    write_edge_list(graph_path, inst.graph, header);
    write_labels(labels_path, inst.labels);
}

namespace {

std::optional<long long> header_field(const std::string& line, const std::string& key) {
    const auto pos = line.find(key + "=");
    if (pos == std::string::npos) return std::nullopt;
    return std::atoll(line.c_str() + pos + key.size() + 1);
}

} // namespace

LoadedGraph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    LoadedGraph loaded;
    std::vector<Edge> edges;
    int max_vertex = -1;
    std::optional<int> declared_vertices;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("rsbm") != std::string::npos) {
                RsbmParams params;
                const auto n = header_field(line, "n");
                const auto d1 = header_field(line, "d1");
                const auto d2 = header_field(line, "d2");
                if (n && d1 && d2) {
                    params.n = static_cast<int>(*n);
                    params.d1 = static_cast<int>(*d1);
                    params.d2 = static_cast<int>(*d2);
                    loaded.header.params = params;
                }
                if (const auto seed = header_field(line, "seed"))
                    loaded.header.seed = static_cast<std::uint64_t>(*seed);
                const auto spos = line.find("sampler=");
                if (spos != std::string::npos) {
                    std::string name = line.substr(spos + 8);
                    const auto end = name.find_first_of(" \t\r");
                    if (end != std::string::npos) name.resize(end);
                    loaded.header.sampler = name;
                }
            }
            if (const auto nv = header_field(line, "vertices"))
                declared_vertices = static_cast<int>(*nv);
            continue;
        }
        std::istringstream ss(line);
        long long u = -1, v = -1;
        if (!(ss >> u >> v) || u < 0 || v < 0 || u >= v)
            throw ParseError("expected 'u v' with 0 <= u < v, got '" + line + "'", line_no);
        std::string rest;
        if (ss >> rest) throw ParseError("trailing tokens after edge", line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_vertex = std::max(max_vertex, static_cast<int>(v));
    }
    int num_vertices = declared_vertices.value_or(max_vertex + 1);
    if (loaded.header.params) num_vertices = std::max(num_vertices, 2 * loaded.header.params->n);
    loaded.graph = Graph::from_edges(num_vertices, edges);
    return loaded;
}

void write_labels(const std::string& path, const Labeling& labels) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    for (int v = 0; v < labels.size(); ++v) out << (labels[v] > 0 ? "1" : "-1") << "\n";
}

Labeling read_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::vector<std::int8_t> signs;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (line == "1" || line == "+1")
            signs.push_back(1);
        else if (line == "-1")
            signs.push_back(-1);
        else
            throw ParseError("expected +1 or -1, got '" + line + "'", line_no);
    }
    return Labeling(std::move(signs));
}

} // namespace rsbm
