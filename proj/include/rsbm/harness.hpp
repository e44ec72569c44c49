#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsbm/graphgen.hpp"
#include "rsbm/recovery.hpp"

namespace rsbm {

inline constexpr const char* kExperimentSchema = "rsbm-experiment-v1";

/// Batch experiment: `trials` independent instances with seeds
/// seed_base + i, each run through the selected recovery method.
struct ExperimentConfig {
    RsbmParams params;
    Sampler sampler = Sampler::configuration;
    int trials = 1;
    std::uint64_t seed_base = 1;
    RecoveryMethod method = RecoveryMethod::spectral_adjacency;
    std::optional<int> saw_depth;             // default: depth formula
    std::optional<double> error_injection;    // majority_only: flipped fraction per side
    double tolerance = 1e-8;
    long max_iter = 100000;
    long max_rejects = kDefaultMaxRejects;
    int jobs = 0; // 0: all available

    static ExperimentConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct TrialRow {
    int trial = 0;
    std::uint64_t seed = 0;
    double agreement = 0.0;
    long errors = 0;
    int rounds = 0;
    bool converged = false;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double gamma = 0.0;
    bool tangle_free = false;
    std::string error; // empty on success
    double wall_time = 0.0; // sidecar only, never in the CSV
};

struct ExperimentResult {
    std::vector<TrialRow> rows;
    double success_rate = 0.0; // fraction of trials with agreement == 1
    double mean_errors = 0.0;
    long max_errors = 0;
    int failed_trials = 0;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

/// Deterministic CSV: schema comment, header row, one row per trial.
/// Wall-clock times are excluded so re-runs are byte-identical.
std::string experiment_csv(const ExperimentResult& result);

/// Aggregate JSON; per-trial wall times live under "timings".
nlohmann::json experiment_json(const ExperimentConfig& config, const ExperimentResult& result);

/// Shortest round-trip decimal form of a double (used by the CSV writer).
std::string format_double(double v);

} // namespace rsbm
