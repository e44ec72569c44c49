#pragma once

#include <json.hpp>

#include "rsbm/recovery.hpp"
#include "rsbm/rigidity.hpp"
#include "rsbm/saw.hpp"
#include "rsbm/spectral.hpp"

namespace rsbm {

// JSON views of the result types. Keys are emitted in sorted order by the
// JSON library, so equal inputs serialize to identical bytes; wall-clock
// data never appears here (it travels in a separate "timings" object).

nlohmann::json to_json(const SpectrumSummary& s, bool include_vectors = false);
nlohmann::json to_json(const RecoveryResult& r);
nlohmann::json to_json(const TangleAudit& a);
nlohmann::json to_json(const PartitionCertificate& c);
nlohmann::json to_json(const BisectionCertificate& c);
nlohmann::json to_json(const MembershipResult& m);
nlohmann::json to_json(const ExpansionReport& r);

} // namespace rsbm
