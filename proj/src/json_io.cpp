#include "rsbm/json_io.hpp"

namespace rsbm {

using nlohmann::json;

json to_json(const SpectrumSummary& s, bool include_vectors) {
    json j;
    j["schema"] = "rsbm-spectrum-v1";
    j["eigenvalues"] = s.eigenvalues;
    j["residuals"] = s.residuals;
    j["iterations"] = s.iterations;
    j["tolerance"] = s.tolerance;
    j["seed"] = s.seed;
    j["analytic_first"] = s.analytic_first;
    if (s.gamma) j["gamma"] = *s.gamma;
    if (!s.notes.empty()) j["notes"] = s.notes;
    if (include_vectors) j["eigenvectors"] = s.eigenvectors;
    return j;
}

json to_json(const RecoveryResult& r) {
    json j;
    j["schema"] = "rsbm-recovery-v1";
    j["method"] = method_name(r.method);
    j["rounds_used"] = r.rounds_used;
    j["converged"] = r.converged;
    if (!r.per_round_errors.empty()) j["per_round_errors"] = r.per_round_errors;
    if (r.agreement) {
        j["agreement"] = *r.agreement;
        j["errors"] = static_cast<long>((1.0 - *r.agreement) * r.final_labels.size() + 0.5);
    }
    if (r.lambda2) j["lambda2"] = *r.lambda2;
    if (r.seed) j["seed"] = *r.seed;
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    return j;
}

json to_json(const TangleAudit& a) {
    json j;
    j["schema"] = "rsbm-tangle-v1";
    j["l"] = a.l;
    j["tangle_free"] = a.tangle_free;
    j["x_count"] = a.x_count;
    j["tree_vertex_count"] = a.tree_vertices.size();
    json histogram = json::object();
    for (int e : a.excess_per_vertex) histogram[std::to_string(e)] = histogram.value(std::to_string(e), 0) + 1;
    j["excess_histogram"] = histogram;
    return j;
}

json to_json(const PartitionCertificate& c) {
    json j;
    j["schema"] = "rsbm-certificate-v1";
    j["kind"] = "uniqueness";
    j["valid_partitions"] = c.valid_partitions;
    j["is_unique"] = c.is_unique;
    j["checked_count"] = c.checked_count;
    return j;
}

json to_json(const BisectionCertificate& c) {
    json j;
    j["schema"] = "rsbm-certificate-v1";
    j["kind"] = "minbisect";
    j["min_cut"] = c.min_cut;
    j["argmin_partitions"] = c.argmin_partitions;
    j["argmin_count"] = c.argmin_count;
    j["checked_count"] = c.checked_count;
    if (c.planted_is_min) j["planted_is_min"] = *c.planted_is_min;
    return j;
}

json to_json(const MembershipResult& m) {
    json j;
    j["schema"] = "rsbm-certificate-v1";
    j["kind"] = "membership";
    j["member"] = m.member;
    if (m.member) j["witness"] = m.witness;
    j["checked_count"] = m.checked_count;
    return j;
}

json to_json(const ExpansionReport& r) {
    json j;
    j["schema"] = "rsbm-certificate-v1";
    j["kind"] = "expansion";
    j["gamma"] = r.gamma;
    j["degree"] = r.degree;
    j["worst_ratio"] = r.worst_ratio;
    j["worst_set"] = r.worst_set;
    j["violations"] = r.violations;
    j["checked_subsets"] = r.checked_subsets;
    j["vacuous"] = r.vacuous;
    return j;
}

} // namespace rsbm
