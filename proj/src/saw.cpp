#include "rsbm/saw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "rsbm/errors.hpp"

namespace rsbm {
namespace {

// counts walks of length exactly `l` from `root`, writing into `row`
void saw_dfs(const Graph& g, int root, int l, std::int32_t* row, std::vector<std::uint8_t>& on_path) {
    struct Frame {
        int vertex;
        std::size_t next;
    };
    std::vector<Frame> stack;
    stack.reserve(static_cast<std::size_t>(l) + 1);
    on_path[root] = 1;
    stack.push_back({root, 0});
    const int last_depth = l - 1; // vertices at this stack depth emit counts
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nbrs = g.neighbors(f.vertex);
        if (f.next >= nbrs.size()) {
            on_path[f.vertex] = 0;
            stack.pop_back();
            continue;
        }
        const int w = nbrs[f.next++];
        if (on_path[w]) continue;
        if (static_cast<int>(stack.size()) - 1 == last_depth) {
            ++row[w]; // length-l walk root -> ... -> w
        } else {
            on_path[w] = 1;
            stack.push_back({w, 0});
        }
    }
}

double estimated_saw_cost(const Graph& g, int l) {
    int max_deg = 0;
    for (int v = 0; v < g.num_vertices(); ++v) max_deg = std::max(max_deg, g.degree(v));
    double cost = static_cast<double>(g.num_vertices()) * max_deg;
    for (int i = 1; i < l; ++i) cost *= std::max(1, max_deg - 1);
    return cost;
}

SawMatrix make_empty(const Graph& g, int l, double budget) {
    if (l < 1) throw ValidationError("build_saw requires l >= 1");
    const double cost = estimated_saw_cost(g, l);
    if (cost > budget)
        throw ResourceError("self-avoiding-walk enumeration too expensive: estimated " +
                                std::to_string(cost) + " path-steps exceeds budget " +
                                std::to_string(budget),
                            cost);
    SawMatrix saw;
    saw.l = l;
    saw.dim = g.num_vertices();
    saw.counts.assign(static_cast<std::size_t>(saw.dim) * saw.dim, 0);
    saw.built_from = graph_fingerprint(g);
    return saw;
}

} // namespace

std::uint64_t graph_fingerprint(const Graph& g) {
    // FNV-1a over the sorted edge list
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(g.num_vertices()));
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) {
                mix(static_cast<std::uint64_t>(u));
                mix(static_cast<std::uint64_t>(v));
            }
    return h;
}

std::int64_t SawMatrix::row_sum(int v) const {
    std::int64_t s = 0;
    const std::int32_t* row = counts.data() + static_cast<std::size_t>(v) * dim;
    for (int j = 0; j < dim; ++j) s += row[j];
    return s;
}

SawMatrix build_saw(const Graph& g, int l, double budget) {
    SawMatrix saw = make_empty(g, l, budget);
    const int n = g.num_vertices();
#pragma omp parallel
    {
        std::vector<std::uint8_t> on_path(static_cast<std::size_t>(n), 0);
#pragma omp for schedule(dynamic, 8)
        for (int root = 0; root < n; ++root)
            saw_dfs(g, root, l, saw.counts.data() + static_cast<std::size_t>(root) * n, on_path);
    }
    return saw;
}

SawMatrix build_saw_serial(const Graph& g, int l, double budget) {
    SawMatrix saw = make_empty(g, l, budget);
    const int n = g.num_vertices();
    std::vector<std::uint8_t> on_path(static_cast<std::size_t>(n), 0);
    for (int root = 0; root < n; ++root)
        saw_dfs(g, root, l, saw.counts.data() + static_cast<std::size_t>(root) * n, on_path);
    return saw;
}

namespace {

// excess of the subgraph induced on the radius-l ball around root
int ball_excess(const Graph& g, int root, int l, std::vector<int>& dist, std::vector<int>& queue) {
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    std::size_t head = 0;
    while (head < queue.size()) {
        const int v = queue[head++];
        if (dist[v] == l) continue;
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    long edges2 = 0; // induced edges counted from both endpoints
    for (int v : queue)
        for (int w : g.neighbors(v))
            if (dist[w] >= 0) ++edges2;
    const int excess = static_cast<int>(edges2 / 2) - static_cast<int>(queue.size()) + 1;
    for (int v : queue) dist[v] = -1;
    return excess;
}

TangleAudit finish_audit(TangleAudit&& audit) {
    int max_excess = 0;
    for (std::size_t v = 0; v < audit.excess_per_vertex.size(); ++v) {
        const int e = audit.excess_per_vertex[v];
        max_excess = std::max(max_excess, e);
        if (e >= 1) ++audit.x_count;
        if (e == 0) audit.tree_vertices.push_back(static_cast<int>(v));
    }
    audit.tangle_free = max_excess <= 1;
    return std::move(audit);
}

} // namespace

TangleAudit tangle_audit(const Graph& g, int l) {
    if (l < 0) throw ValidationError("tangle_audit requires l >= 0");
    TangleAudit audit;
    audit.l = l;
    const int n = g.num_vertices();
    audit.excess_per_vertex.assign(static_cast<std::size_t>(n), 0);
#pragma omp parallel
    {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<int> queue;
        queue.reserve(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 16)
        for (int v = 0; v < n; ++v) audit.excess_per_vertex[v] = ball_excess(g, v, l, dist, queue);
    }
    return finish_audit(std::move(audit));
}

TangleAudit tangle_audit_serial(const Graph& g, int l) {
    if (l < 0) throw ValidationError("tangle_audit requires l >= 0");
    TangleAudit audit;
    audit.l = l;
    const int n = g.num_vertices();
    audit.excess_per_vertex.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) audit.excess_per_vertex[v] = ball_excess(g, v, l, dist, queue);
    return finish_audit(std::move(audit));
}

QuadraticForms saw_quadratic_forms(const SawMatrix& saw, const Labeling& labels) {
    if (labels.size() != saw.dim) throw ValidationError("saw_quadratic_forms: label length mismatch");
    std::int64_t total = 0;
    std::int64_t signed_total = 0;
    for (int i = 0; i < saw.dim; ++i) {
        const std::int32_t* row = saw.counts.data() + static_cast<std::size_t>(i) * saw.dim;
        for (int j = 0; j < saw.dim; ++j) {
            total += row[j];
            signed_total += static_cast<std::int64_t>(labels[i]) * labels[j] * row[j];
        }
    }
    QuadraticForms forms;
    forms.ee_form = static_cast<double>(total) / saw.dim;
    forms.ss_form = static_cast<double>(signed_total) / saw.dim;
    return forms;
}

LinearOperator saw_operator(const SawMatrix& saw) {
    LinearOperator op;
    op.dim = saw.dim;
    std::int64_t max_row = 0;
    for (int v = 0; v < saw.dim; ++v) max_row = std::max(max_row, saw.row_sum(v));
    op.norm_bound = static_cast<double>(max_row);
    op.entrywise_nonnegative = true;
    op.apply = [&saw](const double* x, double* y) {
        const int n = saw.dim;
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            const std::int32_t* row = saw.counts.data() + static_cast<std::size_t>(i) * n;
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += row[j] * x[j];
            y[i] = s;
        }
    };
    return op;
}

SawSpectrum saw_spectrum(const SawMatrix& saw, const SolveOptions& opts) {
    LinearOperator op = saw_operator(saw);
    SawSpectrum spec;
    SpectrumSummary top = top_eigenpairs(op, 1, opts);
    spec.leading.value = top.eigenvalues[0];
    spec.leading.vector = std::move(top.eigenvectors[0]);
    spec.leading.residual = top.residuals[0];
    spec.leading.iterations = top.iterations[0];
    spec.second = dominant_in_complement(op, {spec.leading.vector}, opts);
    return spec;
}

SawSpectrum saw_recover(const Graph& g, int l, const SolveOptions& opts, double budget) {
    SawMatrix saw = build_saw(g, l, budget);
    return saw_spectrum(saw, opts);
}

int default_saw_depth(int d1, int d2, int num_vertices) {
    const double limit = std::log(static_cast<double>(num_vertices)) / 4.0;
    const double step = std::log(static_cast<double>(d1 + d2));
    int l = 1;
    while ((l + 1) * step < limit) ++l;
    return l;
}

void write_saw_matrix(const std::string& path, const SawMatrix& saw) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    long long nnz = 0;
    for (int i = 0; i < saw.dim; ++i)
        for (int j = 0; j <= i; ++j)
            if (saw.at(i, j) != 0) ++nnz;
    out << "%%MatrixMarket matrix coordinate integer symmetric\n";
    out << "% saw l=" << saw.l << " fingerprint=" << saw.built_from << "\n";
    out << saw.dim << " " << saw.dim << " " << nnz << "\n";
    for (int i = 0; i < saw.dim; ++i)
        for (int j = 0; j <= i; ++j)
            if (saw.at(i, j) != 0) out << (i + 1) << " " << (j + 1) << " " << saw.at(i, j) << "\n";
}

SawMatrix read_saw_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    SawMatrix saw;
    std::string line;
    long line_no = 0;
    long long nnz = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '%') {
            const auto lpos = line.find("l=");
            if (lpos != std::string::npos) saw.l = std::atoi(line.c_str() + lpos + 2);
            const auto fpos = line.find("fingerprint=");
            if (fpos != std::string::npos) saw.built_from = std::strtoull(line.c_str() + fpos + 12, nullptr, 10);
            continue;
        }
        if (nnz < 0) {
            int rows = 0, cols = 0;
            if (std::sscanf(line.c_str(), "%d %d %lld", &rows, &cols, &nnz) != 3 || rows != cols || rows < 0)
                throw ParseError("bad matrix-market size line", line_no);
            saw.dim = rows;
            saw.counts.assign(static_cast<std::size_t>(rows) * rows, 0);
            continue;
        }
        int i = 0, j = 0;
        long long v = 0;
        if (std::sscanf(line.c_str(), "%d %d %lld", &i, &j, &v) != 3 || i < 1 || j < 1 || i > saw.dim ||
            j > saw.dim)
            throw ParseError("bad matrix-market entry", line_no);
        saw.counts[static_cast<std::size_t>(i - 1) * saw.dim + (j - 1)] = static_cast<std::int32_t>(v);
        saw.counts[static_cast<std::size_t>(j - 1) * saw.dim + (i - 1)] = static_cast<std::int32_t>(v);
    }
    if (nnz < 0) throw ParseError("missing matrix-market size line");
    return saw;
}

} // namespace rsbm
