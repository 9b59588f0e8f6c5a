#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hilb/explore.hpp"

namespace hilb {

inline constexpr const char* report_schema_version = "1";

nlohmann::json to_json(const CoefficientVector& cv);
nlohmann::json to_json(const IdentityReport& rep);
nlohmann::json to_json(const ExplorationReport& rep);
nlohmann::json to_json(const G1BoundReport& rep);
nlohmann::json to_json(const EnvelopeReport& rep);
nlohmann::json to_json(const ScalingReport& rep);
nlohmann::json to_json(const ProbeReport& rep);
nlohmann::json to_json(const DeltaReport& rep);
nlohmann::json to_json(const NumericalSemigroup& s);

/// Assembles the versioned report document emitted on stdout under --json.
/// Deterministic for fixed inputs and seed: no timestamps, sorted keys.
nlohmann::json make_report(const std::vector<std::string>& command,
                           nlohmann::json inputs, nlohmann::json results,
                           nlohmann::json diagnostics);

} // namespace hilb
