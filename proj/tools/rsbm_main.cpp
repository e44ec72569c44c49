// rsbm: sample planted-partition regular graphs, recover the partition, and
// verify structural certificates at small scale.
//
// Subcommands: generate, recover, experiment, verify, formulas, spectrum.
// Exit codes: 0 success, 1 runtime/convergence failure, 2 validation/parse
// failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsbm/errors.hpp"
#include "rsbm/graph_io.hpp"
#include "rsbm/harness.hpp"
#include "rsbm/int128.hpp"
#include "rsbm/json_io.hpp"
#include "rsbm/model.hpp"
#include "rsbm/recovery.hpp"
#include "rsbm/rigidity.hpp"
#include "rsbm/saw.hpp"

namespace {

using nlohmann::json;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw rsbm::ParseError("cannot open '" + path + "' for writing");
    out << text;
}

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        write_text(out_path, text);
}

struct GenerateArgs {
    int n = 0, d1 = 0, d2 = 0;
    std::uint64_t seed = 1;
    std::string sampler = "configuration";
    long max_rejects = rsbm::kDefaultMaxRejects;
    std::string out, labels;
};

int cmd_generate(const GenerateArgs& a) {
    rsbm::RsbmParams params{a.n, a.d1, a.d2};
    rsbm::Sampler sampler = rsbm::sampler_from_name(a.sampler);
    rsbm::PlantedInstance inst = sampler == rsbm::Sampler::configuration
                                     ? rsbm::sample_rsbm(params, a.seed, a.max_rejects)
                                     : rsbm::sample_lift(params, a.seed, a.max_rejects);
    rsbm::write_instance(a.out, a.labels, inst);
    std::cout << "generated n=" << params.n << " d1=" << params.d1 << " d2=" << params.d2
              << " seed=" << a.seed << " sampler=" << a.sampler << " -> " << a.out << ", " << a.labels
              << "\n";
    return 0;
}

struct RecoverArgs {
    std::string graph, labels, labels_out, out;
    std::string method = "adjacency";
    int saw_depth = 0;
    double tolerance = 1e-10;
    long max_iter = 100000;
    std::uint64_t seed = 1;
    int max_rounds = 0;
    bool balanced = false;
};

int cmd_recover(const RecoverArgs& a) {
    const auto loaded = rsbm::read_edge_list(a.graph);
    rsbm::Labeling planted;
    const bool have_planted = !a.labels.empty();
    if (have_planted) planted = rsbm::read_labels(a.labels);

    rsbm::RecoverOptions opts;
    opts.method = rsbm::method_from_name(a.method);
    opts.solve.tolerance = a.tolerance;
    opts.solve.max_iter = a.max_iter;
    opts.solve.seed = a.seed;
    opts.balanced_rounding = a.balanced;
    if (a.max_rounds > 0) opts.max_rounds = a.max_rounds;
    if (loaded.header.params) opts.params = loaded.header.params;
    if (a.saw_depth > 0)
        opts.saw_depth = a.saw_depth;
    else if (loaded.header.params)
        opts.saw_depth = rsbm::default_saw_depth(loaded.header.params->d1, loaded.header.params->d2,
                                                 loaded.graph.num_vertices());

    const auto t0 = std::chrono::steady_clock::now();
    rsbm::RecoveryResult result;
    if (opts.method == rsbm::RecoveryMethod::majority_only) {
        if (!have_planted)
            throw rsbm::ValidationError("majority_only needs --labels as the starting labeling");
        result = rsbm::majority_iterate(loaded.graph, planted,
                                        rsbm::default_majority_rounds(loaded.graph.num_vertices()));
    } else {
        result = rsbm::spectral_recover(loaded.graph, opts, have_planted ? &planted : nullptr);
    }

    json j = rsbm::to_json(result);
    if (!a.labels_out.empty()) {
        rsbm::write_labels(a.labels_out, result.final_labels);
        j["labels_out"] = a.labels_out;
    }
    // excluded from the determinism contract
    j["timings"] = {{"total_seconds",
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    emit(j, a.out);
    return 0;
}

struct SpectrumArgs {
    std::string graph, out;
    int k = 3;
    double tolerance = 1e-10;
    long max_iter = 100000;
    std::uint64_t seed = 1;
};

int cmd_spectrum(const SpectrumArgs& a) {
    const auto loaded = rsbm::read_edge_list(a.graph);
    rsbm::SolveOptions opts;
    opts.tolerance = a.tolerance;
    opts.max_iter = a.max_iter;
    opts.seed = a.seed;
    emit(rsbm::to_json(rsbm::top_eigenpairs(loaded.graph, a.k, opts)), a.out);
    return 0;
}

struct VerifyArgs {
    std::string kind;
    std::string graph, labels, out;
    int d1 = 0, d2 = 0;
    int l = 1;
    double gamma = -1.0; // <0: measure from the spectrum
    std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a) {
    const auto loaded = rsbm::read_edge_list(a.graph);
    rsbm::Labeling planted;
    const bool have_planted = !a.labels.empty();
    if (have_planted) planted = rsbm::read_labels(a.labels);
    const rsbm::Labeling* planted_ptr = have_planted ? &planted : nullptr;

    int d1 = a.d1 > 0 ? a.d1 : (loaded.header.params ? loaded.header.params->d1 : 0);
    int d2 = a.d2 > 0 ? a.d2 : (loaded.header.params ? loaded.header.params->d2 : 0);

    json j;
    if (a.kind == "uniqueness") {
        if (d1 <= 0) throw rsbm::ValidationError("uniqueness needs --d1 (or a graph header)");
        j = rsbm::to_json(rsbm::enumerate_regular_partitions(loaded.graph, d1, planted_ptr));
    } else if (a.kind == "minbisect") {
        j = rsbm::to_json(rsbm::min_bisection_bruteforce(loaded.graph, planted_ptr));
    } else if (a.kind == "membership") {
        if (d1 <= 0 || d2 <= 0) throw rsbm::ValidationError("membership needs --d1 and --d2");
        j = rsbm::to_json(rsbm::rsbm_membership(loaded.graph, d1, d2));
    } else if (a.kind == "tanglefree") {
        j = rsbm::to_json(rsbm::tangle_audit(loaded.graph, a.l));
    } else if (a.kind == "expansion") {
        double gamma = a.gamma;
        if (gamma < 0.0) {
            rsbm::SolveOptions opts;
            opts.seed = a.seed;
            const auto d = loaded.graph.regular_degree();
            if (!d || *d == 0) throw rsbm::ValidationError("expansion requires a regular graph");
            gamma = 1.0 - rsbm::second_eigenvector(loaded.graph, opts).value / *d;
        }
        j = rsbm::to_json(rsbm::edge_expansion_check(loaded.graph, gamma));
    } else {
        throw rsbm::ValidationError("unknown verify subcommand '" + a.kind +
                                    "' (uniqueness|minbisect|membership|tanglefree|expansion)");
    }
    emit(j, a.out);
    return 0;
}

struct FormulasArgs {
    int d1 = 0, d2 = 0, l = 6;
    bool as_json = false;
    std::string out;
};

int cmd_formulas(const FormulasArgs& a) {
    const auto q = rsbm::check_thresholds(a.d1, a.d2);
    const auto z = rsbm::z_sequence(a.d1, a.d2, a.l);

    json j;
    j["d1"] = a.d1;
    j["d2"] = a.d2;
    j["spectral_condition"] = q.spectral_condition;
    j["majority_condition"] = q.majority_condition;
    if (q.roots_real) {
        j["alpha"] = q.alpha;
        j["beta"] = q.beta;
        j["coeff_a"] = q.coeff_a;
        j["coeff_b"] = q.coeff_b;
    }
    j["tv_rate1"] = q.tv_rate1;
    j["tv_rate2"] = q.tv_rate2;
    json zs = json::array();
    for (auto v : z) zs.push_back(rsbm::to_string(v));
    j["z"] = zs;
    j["lambda1_saw"] = rsbm::to_string(rsbm::predicted_saw_eigenvalue1(a.d1, a.d2, a.l));

    if (a.as_json) {
        emit(j, a.out);
        return 0;
    }
    std::ostringstream text;
    text << "d1=" << a.d1 << " d2=" << a.d2 << "\n";
    text << "spectral_condition ((d1-d2)^2 > 4(d1+d2-1)): " << (q.spectral_condition ? "true" : "false")
         << "\n";
    text << "majority_condition (d1 > d2+4): " << (q.majority_condition ? "true" : "false") << "\n";
    if (q.roots_real) {
        text << "alpha=" << rsbm::format_double(q.alpha) << " beta=" << rsbm::format_double(q.beta)
             << "\n";
        text << "coeff_a=" << rsbm::format_double(q.coeff_a)
             << " coeff_b=" << rsbm::format_double(q.coeff_b) << "\n";
    }
    text << "tv_rate1=" << rsbm::format_double(q.tv_rate1)
         << " tv_rate2=" << rsbm::format_double(q.tv_rate2) << "\n";
    text << "z[1.." << a.l << "] =";
    for (auto v : z) text << " " << rsbm::to_string(v);
    text << "\n";
    text << "lambda1_saw(l=" << a.l << ") = " << rsbm::to_string(rsbm::predicted_saw_eigenvalue1(a.d1, a.d2, a.l))
         << "\n";
    if (a.out.empty() || a.out == "-")
        std::cout << text.str();
    else
        write_text(a.out, text.str());
    return 0;
}

struct ExperimentArgs {
    std::string config;
    std::string out_csv, out_json;
    int jobs = 0;
};

int cmd_experiment(const ExperimentArgs& a) {
    std::ifstream in(a.config);
    if (!in) throw rsbm::ParseError("cannot open config '" + a.config + "'");
    json cfg_json;
    try {
        in >> cfg_json;
    } catch (const json::exception& e) {
        throw rsbm::ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    rsbm::ExperimentConfig config = rsbm::ExperimentConfig::from_json(cfg_json);
    if (a.jobs > 0) config.jobs = a.jobs;

    rsbm::ExperimentResult result = rsbm::run_experiment(config);
    const std::string csv = rsbm::experiment_csv(result);
    if (!a.out_csv.empty()) write_text(a.out_csv, csv);
    emit(rsbm::experiment_json(config, result), a.out_json);
    if (a.out_csv.empty()) std::cout << csv;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular planted-partition graphs: sampling, spectral recovery, certificates"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "sample an instance and write edge list + labels");
    g->add_option("--n", gen.n, "vertices per side")->required();
    g->add_option("--d1", gen.d1, "within-side degree")->required();
    g->add_option("--d2", gen.d2, "cross-side degree")->required();
    g->add_option("--seed", gen.seed, "random seed");
    g->add_option("--sampler", gen.sampler, "configuration|permutation");
    g->add_option("--max-rejects", gen.max_rejects, "sampling restart budget");
    g->add_option("--out", gen.out, "edge-list output path")->required();
    g->add_option("--labels", gen.labels, "labels output path")->required();

    RecoverArgs rec;
    auto* r = app.add_subcommand("recover", "recover the partition from an edge list");
    r->add_option("--graph", rec.graph, "edge-list path")->required();
    r->add_option("--labels", rec.labels, "planted labels (enables error reporting)");
    r->add_option("--labels-out", rec.labels_out, "write recovered labels here");
    r->add_option("--method", rec.method, "adjacency|saw|majority");
    r->add_option("--l", rec.saw_depth, "walk length for --method saw");
    r->add_option("--tol", rec.tolerance, "eigensolver residual tolerance");
    r->add_option("--max-iter", rec.max_iter, "eigensolver iteration cap");
    r->add_option("--max-rounds", rec.max_rounds, "majority round cap");
    r->add_option("--seed", rec.seed, "eigensolver start-vector seed");
    r->add_flag("--balanced", rec.balanced, "balanced rounding instead of the sign rule");
    r->add_option("--out", rec.out, "JSON output path (default stdout)");

    SpectrumArgs spec;
    auto* s = app.add_subcommand("spectrum", "leading adjacency eigenpairs of a graph");
    s->add_option("--graph", spec.graph, "edge-list path")->required();
    s->add_option("--k", spec.k, "number of eigenpairs");
    s->add_option("--tol", spec.tolerance, "residual tolerance");
    s->add_option("--max-iter", spec.max_iter, "iteration cap");
    s->add_option("--seed", spec.seed, "start-vector seed");
    s->add_option("--out", spec.out, "JSON output path (default stdout)");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "brute-force certificates on small graphs");
    v->add_option("kind", ver.kind, "uniqueness|minbisect|membership|tanglefree|expansion")->required();
    v->add_option("--graph", ver.graph, "edge-list path")->required();
    v->add_option("--labels", ver.labels, "planted labels");
    v->add_option("--d1", ver.d1, "within-side degree (defaults to graph header)");
    v->add_option("--d2", ver.d2, "cross-side degree (defaults to graph header)");
    v->add_option("--l", ver.l, "ball radius for tanglefree");
    v->add_option("--gamma", ver.gamma, "spectral gap for expansion (default: measured)");
    v->add_option("--seed", ver.seed, "eigensolver seed for measured gamma");
    v->add_option("--out", ver.out, "JSON output path (default stdout)");

    FormulasArgs form;
    auto* f = app.add_subcommand("formulas", "print thresholds, roots, sequences, rates");
    f->add_option("--d1", form.d1, "within-side degree")->required();
    f->add_option("--d2", form.d2, "cross-side degree")->required();
    f->add_option("--l", form.l, "sequence length");
    f->add_flag("--json", form.as_json, "emit JSON instead of text");
    f->add_option("--out", form.out, "output path (default stdout)");

    ExperimentArgs exp;
    auto* e = app.add_subcommand("experiment", "run a batch of seeded trials from a JSON config");
    e->add_option("--config", exp.config, "JSON config path")->required();
    e->add_option("--out-csv", exp.out_csv, "per-trial CSV path");
    e->add_option("--out-json", exp.out_json, "aggregate JSON path (default stdout)");
    e->add_option("--jobs", exp.jobs, "parallel trials (default: hardware)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (g->parsed()) return cmd_generate(gen);
        if (r->parsed()) return cmd_recover(rec);
        if (s->parsed()) return cmd_spectrum(spec);
        if (v->parsed()) return cmd_verify(ver);
        if (f->parsed()) return cmd_formulas(form);
        if (e->parsed()) return cmd_experiment(exp);
    } catch (const rsbm::ValidationError& err) {
        std::cerr << "{\"error\":\"validation\",\"message\":" << nlohmann::json(err.what()).dump() << "}\n";
        return 2;
    } catch (const rsbm::ParseError& err) {
        std::cerr << "{\"error\":\"parse\",\"message\":" << nlohmann::json(err.what()).dump() << "}\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "{\"error\":\"runtime\",\"message\":" << nlohmann::json(err.what()).dump() << "}\n";
        return 1;
    }
    return 0;
}
