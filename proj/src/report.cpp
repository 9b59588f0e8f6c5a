#include "hilb/report.hpp"

namespace hilb {

using nlohmann::json;

namespace {

const char* kind_name(CoefficientVector::Kind k) {
  switch (k) {
    case CoefficientVector::Kind::samuel:
      return "e";
    case CoefficientVector::Kind::relative:
      return "g";
    case CoefficientVector::Kind::fiber:
      return "f";
  }
  return "?";
}

json sample_json(const SampleRecord& rec) {
  json j;
  j["q"] = rec.q_generators;
  if (rec.value)
    j["value"] = *rec.value;
  else
    j["value"] = nullptr;
  if (!rec.note.empty()) j["note"] = rec.note;
  return j;
}

} // namespace

json to_json(const CoefficientVector& cv) {
  return json{{"kind", kind_name(cv.kind)},
              {"values", cv.values},
              {"degree", cv.degree},
              {"postulation", cv.postulation},
              {"window_end", cv.window_end}};
}

json to_json(const IdentityReport& rep) {
  json lines = json::array();
  for (const IdentityLine& l : rep.lines)
    lines.push_back({{"name", l.name}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"ok", l.ok}});
  return json{{"e_ring", to_json(rep.e_ring)},
              {"e_ideal_module", to_json(rep.e_ideal_module)},
              {"g", to_json(rep.g)},
              {"f", to_json(rep.f)},
              {"len_r_mod_k", rep.len_r_mod_k},
              {"identities", lines},
              {"all_ok", rep.all_ok}};
}

json to_json(const ExplorationReport& rep) {
  json samples = json::array();
  for (const SampleRecord& rec : rep.samples) samples.push_back(sample_json(rec));
  return json{{"target", rep.target},       {"seed", rep.seed},
              {"samples", samples},         {"observed", rep.observed},
              {"violations", rep.violations}, {"classification", rep.classification}};
}

json to_json(const G1BoundReport& rep) {
  json j = to_json(rep.base);
  j["lower_bound"] = rep.lower_bound;
  j["upper_bound"] = 0;
  j["all_within"] = rep.all_within;
  return j;
}

json to_json(const EnvelopeReport& rep) {
  json rows = json::array();
  for (const EnvelopeRow& r : rep.rows)
    rows.push_back({{"n", r.n},
                    {"deviation", r.deviation},
                    {"lower", r.lower},
                    {"upper", r.upper},
                    {"ok", r.ok}});
  return json{{"e0", rep.e0},   {"r", rep.r},           {"i_m", rep.i_m},
              {"rows", rows},   {"all_ok", rep.all_ok}};
}

json to_json(const ScalingReport& rep) {
  json rows = json::array();
  for (const ScalingRow& r : rep.rows)
    rows.push_back({{"k", r.k},
                    {"e0", r.e0},
                    {"e1", r.e1},
                    {"e0_expected", r.e0_expected},
                    {"e1_expected", r.e1_expected},
                    {"ok", r.ok}});
  return json{{"r", rep.r},
              {"base_e0", rep.base_e0},
              {"base_e1", rep.base_e1},
              {"rows", rows},
              {"all_ok", rep.all_ok}};
}

json to_json(const ProbeReport& rep) {
  json rows = json::array();
  for (const ProbeRow& r : rep.rows)
    rows.push_back({{"q", r.q_generators},
                    {"i_q_ring", r.i_q_ring},
                    {"i_q_max", r.i_q_max},
                    {"len_r_qk", r.len_r_qk},
                    {"len_q_qk", r.len_q_qk}});
  return json{{"seed", rep.seed},
              {"d", rep.d},
              {"len_r_mod_k", rep.len_r_mod_k},
              {"rows", rows},
              {"i_ring_constant", rep.i_ring_constant},
              {"gap_is_d_minus_1", rep.gap_is_d_minus_1},
              {"qk_colength_matches", rep.qk_colength_matches},
              {"violations", rep.violations}};
}

json to_json(const DeltaReport& rep) {
  json dk = json::array();
  for (const DeltaValue& v : rep.delta_k)
    dk.push_back({{"value", v.value}, {"witness_gaps", v.witness_gaps}});
  json dr = json::array();
  for (const DeltaValue& v : rep.delta_r)
    dr.push_back({{"value", v.value}, {"witness_gaps", v.witness_gaps}});
  return json{{"delta_k", rep.delta_k_values},
              {"delta_r", rep.delta_r_values},
              {"delta_k_rows", dk},
              {"delta_r_rows", dr},
              {"len_r_mod_k", rep.len_r_mod_k},
              {"sup_delta_k", rep.sup_delta_k},
              {"sup_check_rhs", rep.sup_check_rhs},
              {"sup_ok", rep.sup_ok},
              {"inf_delta_r", rep.inf_delta_r},
              {"inf_ok", rep.inf_ok}};
}

json to_json(const NumericalSemigroup& s) {
  return json{{"generators", s.generators()},
              {"minimal_generators", s.minimal_generators()},
              {"gaps", s.gaps()},
              {"frobenius", s.frobenius()},
              {"conductor", s.conductor()},
              {"gap_count", s.gap_count()}};
}

json make_report(const std::vector<std::string>& command, json inputs, json results,
                 json diagnostics) {
  if (!diagnostics.contains("warnings")) diagnostics["warnings"] = json::array();
  return json{{"schema_version", report_schema_version},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"diagnostics", std::move(diagnostics)}};
}

} // namespace hilb
