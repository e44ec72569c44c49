#include "rsbm/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rsbm/errors.hpp"
#include "rsbm/saw.hpp"

namespace rsbm {

std::string method_name(RecoveryMethod m) {
    switch (m) {
        case RecoveryMethod::spectral_adjacency: return "spectral_adjacency";
        case RecoveryMethod::spectral_saw: return "spectral_saw";
        case RecoveryMethod::majority_only: return "majority_only";
    }
    return "unknown";
}

RecoveryMethod method_from_name(const std::string& name) {
    if (name == "spectral_adjacency" || name == "adjacency") return RecoveryMethod::spectral_adjacency;
    if (name == "spectral_saw" || name == "saw") return RecoveryMethod::spectral_saw;
    if (name == "majority_only" || name == "majority") return RecoveryMethod::majority_only;
    throw ValidationError("unknown recovery method '" + name + "'");
}

Labeling majority_step(const Graph& g, const Labeling& labels) {
    if (labels.size() != g.num_vertices()) throw ValidationError("majority_step: label length mismatch");
    Labeling out = labels;
    const int n = g.num_vertices();
#pragma omp parallel for schedule(static)
    for (int v = 0; v < n; ++v) {
        int sum = 0;
        for (int w : g.neighbors(v)) sum += labels[w];
        if (sum != 0) out.signs[v] = static_cast<std::int8_t>(sum > 0 ? 1 : -1);
    }
    return out;
}

Labeling majority_step_serial(const Graph& g, const Labeling& labels) {
    if (labels.size() != g.num_vertices()) throw ValidationError("majority_step: label length mismatch");
    Labeling out = labels;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int sum = 0;
        for (int w : g.neighbors(v)) sum += labels[w];
        if (sum != 0) out.signs[v] = static_cast<std::int8_t>(sum > 0 ? 1 : -1);
    }
    return out;
}

Overlap overlap(const Labeling& a, const Labeling& b) {
    if (a.size() != b.size()) throw ValidationError("overlap: label length mismatch");
    long match = 0;
    for (int v = 0; v < a.size(); ++v)
        if (a[v] == b[v]) ++match;
    const long n = a.size();
    Overlap out;
    out.errors = std::min(match, n - match);
    out.agreement = n > 0 ? static_cast<double>(n - out.errors) / n : 1.0;
    return out;
}

int default_majority_rounds(int num_vertices) {
    return static_cast<int>(std::ceil(4.0 * std::log2(std::max(2, num_vertices)))) + 10;
}

RecoveryResult majority_iterate(const Graph& g, const Labeling& start, int max_rounds,
                                const Labeling* planted) {
    if (max_rounds < 1) throw ValidationError("majority_iterate: max_rounds >= 1 required");
    RecoveryResult result;
    result.method = RecoveryMethod::majority_only;
    result.initial_labels = start;
    Labeling current = start;
    if (planted) result.per_round_errors.push_back(overlap(current, *planted).errors);
    for (int round = 0; round < max_rounds; ++round) {
        Labeling next = majority_step(g, current);
        ++result.rounds_used;
        const bool fixed = next == current;
        current = std::move(next);
        if (planted) result.per_round_errors.push_back(overlap(current, *planted).errors);
        if (fixed) {
            result.converged = true;
            break;
        }
    }
    result.final_labels = std::move(current);
    if (planted) result.agreement = overlap(result.final_labels, *planted).agreement;
    return result;
}

Labeling round_labels(const std::vector<double>& v, bool balanced) {
    const int n = static_cast<int>(v.size());
    std::vector<std::int8_t> signs(v.size(), -1);
    if (!balanced) {
        for (int i = 0; i < n; ++i) signs[i] = static_cast<std::int8_t>(v[i] >= 0.0 ? 1 : -1);
    } else {
        std::vector<int> order(v.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&v](int a, int b) {
            if (v[a] != v[b]) return v[a] > v[b];
            return a < b;
        });
        for (int r = 0; r < n / 2; ++r) signs[order[r]] = 1;
    }
    return Labeling(std::move(signs));
}

RecoveryResult spectral_recover(const Graph& g, const RecoverOptions& opts, const Labeling* planted) {
    if (opts.method == RecoveryMethod::majority_only)
        throw ValidationError("spectral_recover requires a spectral method");
    if (!g.regular_degree())
        throw ValidationError("spectral_recover requires a regular graph");

    std::vector<std::string> warnings;
    if (opts.params) {
        const auto q = check_thresholds(opts.params->d1, opts.params->d2);
        if (!q.spectral_condition)
            warnings.push_back("spectral condition (d1-d2)^2 > 4(d1+d2-1) fails for d1=" +
                               std::to_string(opts.params->d1) + ", d2=" + std::to_string(opts.params->d2) +
                               "; recovery is not expected to succeed");
        if (opts.params->d1 % 2 != 0)
            warnings.push_back("d1 is odd; adjacency-based recovery is applied heuristically");
    }

    double lambda2 = 0.0;
    std::vector<double> v2;
    if (opts.method == RecoveryMethod::spectral_adjacency) {
        EigenPair pair = second_eigenvector(g, opts.solve);
        lambda2 = pair.value;
        v2 = std::move(pair.vector);
    } else {
        SawSpectrum spec = saw_recover(g, opts.saw_depth, opts.solve);
        lambda2 = spec.second.value;
        v2 = std::move(spec.second.vector);
    }

    Labeling rounded = round_labels(v2, opts.balanced_rounding);
    const int max_rounds = opts.max_rounds > 0 ? opts.max_rounds : default_majority_rounds(g.num_vertices());
    RecoveryResult result = majority_iterate(g, rounded, max_rounds, planted);
    result.method = opts.method;
    result.lambda2 = lambda2;
    result.seed = opts.solve.seed;
    result.warnings = std::move(warnings);
    return result;
}

} // namespace rsbm
