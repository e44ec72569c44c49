#include "rsbm/harness.hpp"

#include <charconv>
#include <chrono>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rsbm/errors.hpp"
#include "rsbm/rng.hpp"
#include "rsbm/saw.hpp"

namespace rsbm {

using nlohmann::json;

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    ExperimentConfig c;
    c.params.n = j.at("n").get<int>();
    c.params.d1 = j.at("d1").get<int>();
    c.params.d2 = j.at("d2").get<int>();
    c.sampler = sampler_from_name(j.value("sampler", std::string("configuration")));
    c.trials = j.value("trials", 1);
    c.seed_base = j.value("seed_base", std::uint64_t{1});
    c.method = method_from_name(j.value("method", std::string("spectral_adjacency")));
    if (j.contains("saw_depth")) c.saw_depth = j.at("saw_depth").get<int>();
    if (j.contains("error_injection")) c.error_injection = j.at("error_injection").get<double>();
    c.tolerance = j.value("tolerance", 1e-8);
    c.max_iter = j.value("max_iter", 100000L);
    c.max_rejects = j.value("max_rejects", kDefaultMaxRejects);
    c.jobs = j.value("jobs", 0);
    if (c.trials < 1) throw ValidationError("trials >= 1 required");
    if (c.error_injection && (*c.error_injection < 0.0 || *c.error_injection >= 0.5))
        throw ValidationError("error_injection must lie in [0, 1/2)");
    return c;
}

json ExperimentConfig::to_json() const {
    json j;
    j["n"] = params.n;
    j["d1"] = params.d1;
    j["d2"] = params.d2;
    j["sampler"] = sampler_name(sampler);
    j["trials"] = trials;
    j["seed_base"] = seed_base;
    j["method"] = method_name(method);
    if (saw_depth) j["saw_depth"] = *saw_depth;
    if (error_injection) j["error_injection"] = *error_injection;
    j["tolerance"] = tolerance;
    j["max_iter"] = max_iter;
    j["max_rejects"] = max_rejects;
    j["jobs"] = jobs;
    return j;
}

namespace {

// flips floor(eps*n) uniformly chosen labels on each side of the planted
// partition
Labeling inject_errors(const Labeling& planted, double eps, std::uint64_t seed) {
    Labeling noisy = planted;
    std::vector<int> side_a, side_b;
    for (int v = 0; v < planted.size(); ++v)
        (planted[v] > 0 ? side_a : side_b).push_back(v);
    Rng rng = Rng::stream(seed, 777);
    auto flip_some = [&](const std::vector<int>& side) {
        const int count = static_cast<int>(eps * static_cast<double>(side.size()));
        std::vector<int> picks = rng.sample_subset(static_cast<int>(side.size()), count);
        for (int idx : picks) noisy.signs[side[idx]] = static_cast<std::int8_t>(-noisy.signs[side[idx]]);
    };
    flip_some(side_a);
    flip_some(side_b);
    return noisy;
}

TrialRow run_trial(const ExperimentConfig& config, int trial) {
    TrialRow row;
    row.trial = trial;
    row.seed = config.seed_base + static_cast<std::uint64_t>(trial);
    const auto start = std::chrono::steady_clock::now();
    try {
        PlantedInstance inst = config.sampler == Sampler::configuration
                                   ? sample_rsbm(config.params, row.seed, config.max_rejects)
                                   : sample_lift(config.params, row.seed, config.max_rejects);

        SolveOptions solve;
        solve.tolerance = config.tolerance;
        solve.max_iter = config.max_iter;
        solve.seed = row.seed;

        RecoveryResult rec;
        if (config.method == RecoveryMethod::majority_only) {
            const double eps = config.error_injection.value_or(0.05);
            Labeling start_labels = inject_errors(inst.labels, eps, row.seed);
            rec = majority_iterate(inst.graph, start_labels,
                                   default_majority_rounds(inst.graph.num_vertices()), &inst.labels);
        } else {
            RecoverOptions opts;
            opts.method = config.method;
            opts.saw_depth = config.saw_depth.value_or(
                default_saw_depth(config.params.d1, config.params.d2, inst.graph.num_vertices()));
            opts.solve = solve;
            opts.params = config.params;
            rec = spectral_recover(inst.graph, opts, &inst.labels);
        }
        row.agreement = rec.agreement.value_or(0.0);
        row.errors = rec.per_round_errors.empty() ? 0 : rec.per_round_errors.back();
        row.rounds = rec.rounds_used;
        row.converged = rec.converged;

        SpectrumSummary spec = top_eigenpairs(inst.graph, 3, solve);
        row.lambda1 = spec.eigenvalues[0];
        row.lambda2 = spec.eigenvalues[1];
        row.lambda3 = spec.eigenvalues[2];
        row.gamma = spec.gamma.value_or(0.0);

        const int depth = config.saw_depth.value_or(
            default_saw_depth(config.params.d1, config.params.d2, inst.graph.num_vertices()));
        row.tangle_free = tangle_audit(inst.graph, depth).tangle_free;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.trials < 1) throw ValidationError("trials >= 1 required");
    ExperimentResult result;
    result.rows.resize(static_cast<std::size_t>(config.trials));

#ifdef _OPENMP
    const int jobs = config.jobs > 0 ? config.jobs : omp_get_max_threads();
    omp_set_max_active_levels(1);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (int i = 0; i < config.trials; ++i) result.rows[static_cast<std::size_t>(i)] = run_trial(config, i);

    long success = 0;
    double total_errors = 0.0;
    long counted = 0;
    for (const auto& row : result.rows) {
        if (!row.error.empty()) {
            ++result.failed_trials;
            continue;
        }
        ++counted;
        if (row.agreement == 1.0) ++success;
        total_errors += static_cast<double>(row.errors);
        result.max_errors = std::max(result.max_errors, row.errors);
    }
    result.success_rate = counted > 0 ? static_cast<double>(success) / counted : 0.0;
    result.mean_errors = counted > 0 ? total_errors / counted : 0.0;
    return result;
}

std::string format_double(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string experiment_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "# schema " << kExperimentSchema << "\n";
    out << "trial,seed,agreement,errors,rounds,converged,lambda1,lambda2,lambda3,gamma,tangle_free,error\n";
    for (const auto& row : result.rows) {
        out << row.trial << ',' << row.seed << ',' << format_double(row.agreement) << ',' << row.errors
            << ',' << row.rounds << ',' << (row.converged ? 1 : 0) << ',' << format_double(row.lambda1)
            << ',' << format_double(row.lambda2) << ',' << format_double(row.lambda3) << ','
            << format_double(row.gamma) << ',' << (row.tangle_free ? 1 : 0) << ',' << csv_escape(row.error)
            << "\n";
    }
    return out.str();
}

json experiment_json(const ExperimentConfig& config, const ExperimentResult& result) {
    json j;
    j["schema"] = kExperimentSchema;
    j["config"] = config.to_json();
    j["success_rate"] = result.success_rate;
    j["mean_errors"] = result.mean_errors;
    j["max_errors"] = result.max_errors;
    j["failed_trials"] = result.failed_trials;
    j["trials"] = result.rows.size();
    json timings = json::array();
    for (const auto& row : result.rows) timings.push_back(row.wall_time);
    j["timings"] = {{"per_trial_seconds", timings}};
    return j;
}

} // namespace rsbm
