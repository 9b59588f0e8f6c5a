// hilbcoeff: exact Hilbert / fiber / K-relative coefficient workbench.
//
// Subcommands: length, coeffs, identities, i-invariant, explore, semigroup,
// scaling. Human-readable tables by default; --json emits the versioned
// report document. Exit codes: 0 ok, 1 input error, 2 resource budget,
// 3 verified-identity violation (engine defect signal).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hilb/explore.hpp"
#include "hilb/parse.hpp"
#include "hilb/report.hpp"

using namespace hilb;
using nlohmann::json;

namespace {

struct CommonOptions {
  std::string ring_file;
  bool json_out = false;
  std::uint32_t characteristic = 0; // 0: use HILB_CHAR or 32003
  std::uint64_t budget = 200000;
  int n_max = 40;
  std::uint64_t seed = 1;
  int samples = 10;
};

std::uint32_t default_characteristic(const CommonOptions& opts) {
  if (opts.characteristic != 0) return opts.characteristic;
  if (const char* env = std::getenv("HILB_CHAR")) {
    const long v = std::atol(env);
    if (v > 2) return static_cast<std::uint32_t>(v);
  }
  return 32003;
}

RingDocument load_ring(const CommonOptions& opts) {
  std::ifstream in(opts.ring_file);
  if (!in) throw DomainError("cannot read ring file '" + opts.ring_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  GroebnerOptions gopts;
  gopts.spair_budget = opts.budget;
  return parse_ring_document(buf.str(), default_characteristic(opts), gopts);
}

ModuleSpec parse_module(const RingDocument& doc, const std::string& text) {
  if (text.empty() || text == "R") return ModuleSpec::ring();
  if (text.rfind("R/", 0) == 0)
    return ModuleSpec::quotient(resolve_ideal(doc, text.substr(2)));
  return ModuleSpec::ideal_module(resolve_ideal(doc, text));
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw DomainError("empty integer list '" + text + "'");
  return out;
}

SemigroupIdeal parse_semigroup_ideal(const NumericalSemigroup& s, const std::string& text) {
  if (text.empty() || text == "m") return SemigroupIdeal::maximal(s);
  SemigroupIdeal ideal(s, parse_int_list(text));
  if (!ideal.is_integral())
    throw DomainError("ideal generators must lie in the semigroup");
  return ideal;
}

std::string coeff_line(const char* name, const CoefficientVector& cv) {
  std::ostringstream out;
  out << name << " = (";
  for (std::size_t i = 0; i < cv.values.size(); ++i) {
    if (i > 0) out << ", ";
    out << cv.values[i];
  }
  out << ")  postulation=" << cv.postulation << " window_end=" << cv.window_end;
  return out.str();
}

struct Emitter {
  std::vector<std::string> command;
  json inputs = json::object();
  json diagnostics = json::object();
  bool json_out = false;
  std::ostringstream text;

  int finish(const json& results, int code = 0) {
    if (json_out) {
      std::cout << make_report(command, inputs, results, diagnostics).dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
    return code;
  }

  int fail(const std::string& kind, const std::string& message, int code) {
    if (json_out) {
      diagnostics["error"] = {{"kind", kind}, {"message", message}};
      std::cout << make_report(command, inputs, json::object(), diagnostics).dump(2)
                << "\n";
    } else {
      std::cerr << "error (" << kind << "): " << message << "\n";
    }
    return code;
  }
};

// ---- subcommand bodies -------------------------------------------------------

int run_length(const CommonOptions& opts, const std::string& q_ref, Emitter& em) {
  const RingDocument doc = load_ring(opts);
  em.inputs["ring_document"] = doc.source;
  em.inputs["q"] = q_ref;
  const IdealHandle q = resolve_ideal(doc, q_ref);
  const std::optional<long long> len = q.quotient_length();
  json results;
  if (len) {
    results["length"] = *len;
    em.text << "l(R/Q) = " << *len << "\n";
  } else {
    results["length"] = "infinite";
    em.text << "l(R/Q) = infinite\n";
  }
  results["dimension"] = q.quotient_dimension();
  return em.finish(results);
}

int run_coeffs(const CommonOptions& opts, const std::string& q_ref,
               const std::string& k_ref, const std::string& module_ref,
               const std::string& kind, Emitter& em) {
  const RingDocument doc = load_ring(opts);
  em.inputs["ring_document"] = doc.source;
  em.inputs["q"] = q_ref;
  const IdealHandle q = resolve_ideal(doc, q_ref);
  const FitOptions fit{opts.n_max};
  json results;
  if (kind == "e") {
    const ModuleSpec m = parse_module(doc, module_ref);
    em.inputs["module"] = m.describe();
    const CoefficientVector e = samuel_coeffs(q, m, fit);
    results["e"] = to_json(e);
    em.text << coeff_line("e(Q,M)", e) << "\n";
  } else if (kind == "g" || kind == "f") {
    if (k_ref.empty()) throw DomainError("--k is required for g/f coefficients");
    em.inputs["k"] = k_ref;
    const IdealHandle k = resolve_ideal(doc, k_ref);
    if (kind == "g") {
      const CoefficientVector g = relative_coeffs(k, q, fit);
      results["g"] = to_json(g);
      em.text << coeff_line("g^K(Q)", g) << "\n";
    } else {
      const CoefficientVector f = fiber_coeffs(k, q, fit);
      results["f"] = to_json(f);
      em.text << coeff_line("f^K(Q)", f) << "\n";
    }
  } else {
    throw DomainError("unknown coefficient kind '" + kind + "'");
  }
  return em.finish(results);
}

int run_identities(const CommonOptions& opts, const std::string& k_ref,
                   const std::string& q_ref, Emitter& em) {
  const RingDocument doc = load_ring(opts);
  em.inputs["ring_document"] = doc.source;
  em.inputs["k"] = k_ref;
  em.inputs["q"] = q_ref;
  const IdentityReport rep = verify_coefficient_identities(
      resolve_ideal(doc, k_ref), resolve_ideal(doc, q_ref), FitOptions{opts.n_max});
  em.text << coeff_line("e(Q,R)", rep.e_ring) << "\n"
          << coeff_line("e(Q,K)", rep.e_ideal_module) << "\n"
          << coeff_line("g^K(Q)", rep.g) << "\n"
          << coeff_line("f^K(Q)", rep.f) << "\n"
          << "l(R/K) = " << rep.len_r_mod_k << "\n";
  for (const IdentityLine& line : rep.lines)
    em.text << (line.ok ? "PASS " : "FAIL ") << line.name << "  [" << line.lhs
            << " vs " << line.rhs << "]\n";
  return em.finish(to_json(rep), rep.all_ok ? 0 : 3);
}

int run_i_invariant(const CommonOptions& opts, const std::string& q_ref,
                    const std::string& module_ref, Emitter& em) {
  const RingDocument doc = load_ring(opts);
  em.inputs["ring_document"] = doc.source;
  em.inputs["q"] = q_ref;
  const ModuleSpec m = parse_module(doc, module_ref);
  em.inputs["module"] = m.describe();
  const long long value =
      i_invariant(resolve_ideal(doc, q_ref), m, FitOptions{opts.n_max});
  em.text << "I(Q;M) = " << value << "\n";
  return em.finish(json{{"i_invariant", value}});
}

void print_exploration(Emitter& em, const ExplorationReport& rep) {
  em.text << "target " << rep.target << "  seed " << rep.seed << "\n";
  em.text << "observed = {";
  for (std::size_t i = 0; i < rep.observed.size(); ++i)
    em.text << (i ? ", " : "") << rep.observed[i];
  em.text << "}  classification: " << rep.classification << "\n";
  for (const std::string& v : rep.violations) em.text << "VIOLATION " << v << "\n";
}

int run_explore(const CommonOptions& opts, const std::string& mode,
                const std::string& k_ref, const std::string& module_ref, int index,
                const std::string& q_ref, const std::string& lh_text, long long i_m,
                int n_check, Emitter& em) {
  const RingDocument doc = load_ring(opts);
  em.inputs["ring_document"] = doc.source;
  em.inputs["mode"] = mode;
  const FitOptions fit{opts.n_max};
  SamplerConfig cfg;
  cfg.seed = opts.seed;
  cfg.sample_count = opts.samples;
  em.diagnostics["seed"] = opts.seed;

  std::optional<IdealHandle> k;
  if (!k_ref.empty()) {
    k = resolve_ideal(doc, k_ref);
    em.inputs["k"] = k_ref;
  }

  if (mode == "lambda" || mode == "delta") {
    cfg.require_subset_of_k = mode == "delta";
    if (cfg.require_subset_of_k && !k)
      throw DomainError("delta exploration needs --k");
    std::vector<IdealHandle> qs;
    if (!q_ref.empty()) {
      qs.push_back(resolve_ideal(doc, q_ref));
      em.inputs["q"] = q_ref;
    } else {
      qs = sample_parameter_ideals(doc.ring, cfg, k ? &*k : nullptr);
    }
    ExplorationReport rep;
    if (!module_ref.empty()) {
      const ModuleSpec m = parse_module(doc, module_ref);
      em.inputs["module"] = m.describe();
      rep = explore_samuel_set(doc.ring, m, index, qs, cfg.seed, fit);
    } else {
      if (!k) throw DomainError("lambda exploration needs --k or --module");
      rep = explore_relative_set(*k, index, qs, cfg.seed, fit);
    }
    print_exploration(em, rep);
    return em.finish(to_json(rep));
  }

  if (mode == "bounds") {
    json results;
    bool any = false;
    if (!lh_text.empty()) {
      if (!k) throw DomainError("g1 bounds need --k");
      const std::vector<long long> lh = parse_int_list(lh_text);
      const auto qs = sample_parameter_ideals(doc.ring, cfg);
      const G1BoundReport rep = check_g1_bounds(*k, qs, lh, cfg.seed, fit);
      results["g1_bounds"] = to_json(rep);
      em.text << "g1 bounds: [" << rep.lower_bound << ", 0]  "
              << (rep.all_within ? "PASS" : "FAIL") << "\n";
      print_exploration(em, rep.base);
      any = true;
    }
    if (!q_ref.empty()) {
      const IdealHandle q = resolve_ideal(doc, q_ref);
      em.inputs["q"] = q_ref;
      const ModuleSpec m = parse_module(doc, module_ref);
      const EnvelopeReport rep = check_growth_envelope(q, m, i_m, n_check, fit);
      results["envelope"] = to_json(rep);
      em.text << "envelope with I_M = " << i_m << ": "
              << (rep.all_ok ? "PASS" : "FAIL") << "\n";
      any = true;
    }
    if (i_m >= 0 && q_ref.empty()) {
      const ModuleSpec m = parse_module(doc, module_ref);
      const auto qs = sample_parameter_ideals(doc.ring, cfg);
      const ExplorationReport rep = check_e1_bound(doc.ring, m, i_m, qs, cfg.seed, fit);
      results["e1_bound"] = to_json(rep);
      em.text << "|e1| <= " << i_m << ": "
              << (rep.violations.empty() ? "PASS" : "FAIL") << "\n";
      print_exploration(em, rep);
      any = true;
    }
    if (!any)
      throw DomainError("bounds mode needs --lh (g1), --q + --im (envelope) or --im (e1)");
    return em.finish(results);
  }

  if (mode == "probe") {
    if (!k) throw DomainError("probe needs --k");
    const auto qs = sample_parameter_ideals(doc.ring, cfg);
    const ProbeReport rep = buchsbaum_probe(*k, qs, cfg.seed, fit);
    em.text << "I(Q;R) constant: " << (rep.i_ring_constant ? "yes" : "no") << "\n"
            << "I(Q;m) - I(Q;R) = d-1: " << (rep.gap_is_d_minus_1 ? "yes" : "no") << "\n"
            << "l(Q/QK) = d*l(R/K): " << (rep.qk_colength_matches ? "yes" : "no") << "\n";
    for (const std::string& v : rep.violations) em.text << "VIOLATION " << v << "\n";
    return em.finish(to_json(rep));
  }

  throw DomainError("unknown explore mode '" + mode + "'");
}

int run_semigroup(const CommonOptions& opts, const std::string& mode,
                  const std::string& gens_text, const std::string& k_text,
                  const std::string& i_text, Emitter& em) {
  const NumericalSemigroup s =
      NumericalSemigroup::from_generators(parse_int_list(gens_text));
  em.inputs["generators"] = parse_int_list(gens_text);

  if (mode == "info") {
    em.text << "gaps = {";
    for (std::size_t i = 0; i < s.gaps().size(); ++i)
      em.text << (i ? ", " : "") << s.gaps()[i];
    em.text << "}  frobenius = " << s.frobenius() << "  conductor = " << s.conductor()
            << "\n";
    return em.finish(json{{"semigroup", to_json(s)}});
  }

  if (mode == "e1") {
    const SemigroupIdeal ideal = parse_semigroup_ideal(s, i_text);
    em.inputs["i"] = i_text.empty() ? "m" : i_text;
    const FitOptions fit{opts.n_max};
    json results;
    const long long e1_ring = e1_via_blowup(ideal, nullptr);
    const CoefficientVector e = semigroup_samuel_coeffs(ideal, nullptr, fit);
    results["ring"] = {{"e0", e.values[0]},
                       {"e1_interpolated", e.values[1]},
                       {"e1_blowup", e1_ring},
                       {"match", e.values[1] == e1_ring}};
    em.text << "e(I,R): e0 = " << e.values[0] << ", e1 = " << e.values[1]
            << " (blow-up " << e1_ring << ")\n";
    if (!k_text.empty()) {
      const SemigroupIdeal k = parse_semigroup_ideal(s, k_text);
      em.inputs["k"] = k_text;
      const long long e1_k = e1_via_blowup(ideal, &k);
      const CoefficientVector ek = semigroup_samuel_coeffs(ideal, &k, fit);
      results["k_module"] = {{"e0", ek.values[0]},
                             {"e1_interpolated", ek.values[1]},
                             {"e1_blowup", e1_k},
                             {"match", ek.values[1] == e1_k},
                             {"g1", semigroup_relative_g1(s, k, ideal)}};
      em.text << "e(I,K): e0 = " << ek.values[0] << ", e1 = " << ek.values[1]
              << " (blow-up " << e1_k << "), g1^K(I) = "
              << semigroup_relative_g1(s, k, ideal) << "\n";
    }
    const bool ok = results["ring"]["match"].get<bool>() &&
                    (!results.contains("k_module") ||
                     results["k_module"]["match"].get<bool>());
    return em.finish(results, ok ? 0 : 3);
  }

  if (mode == "delta") {
    const SemigroupIdeal k = parse_semigroup_ideal(s, k_text);
    em.inputs["k"] = k_text.empty() ? "m" : k_text;
    const DeltaReport rep = delta_sets(s, k);
    em.text << "delta^K = {";
    for (std::size_t i = 0; i < rep.delta_k_values.size(); ++i)
      em.text << (i ? ", " : "") << rep.delta_k_values[i];
    em.text << "}  sup check: " << (rep.sup_ok ? "PASS" : "FAIL") << "\n";
    em.text << "delta_R = {";
    for (std::size_t i = 0; i < rep.delta_r_values.size(); ++i)
      em.text << (i ? ", " : "") << rep.delta_r_values[i];
    em.text << "}  inf check: " << (rep.inf_ok ? "PASS" : "FAIL") << "\n";
    return em.finish(to_json(rep), rep.sup_ok && rep.inf_ok ? 0 : 3);
  }

  if (mode == "oversemigroups") {
    const auto over = oversemigroups(s);
    json list = json::array();
    for (const NumericalSemigroup& b : over) list.push_back(to_json(b));
    em.text << over.size() << " oversemigroups\n";
    for (const NumericalSemigroup& b : over) {
      em.text << "  gaps {";
      for (std::size_t i = 0; i < b.gaps().size(); ++i)
        em.text << (i ? ", " : "") << b.gaps()[i];
      em.text << "}\n";
    }
    return em.finish(json{{"oversemigroups", list}});
  }

  throw DomainError("unknown semigroup mode '" + mode + "'");
}

int run_scaling(const CommonOptions& opts, const std::string& gens_text,
                const std::string& i_ref, const std::string& module_ref, int k_max,
                Emitter& em) {
  const FitOptions fit{opts.n_max};
  ScalingReport rep;
  if (!gens_text.empty()) {
    const NumericalSemigroup s =
        NumericalSemigroup::from_generators(parse_int_list(gens_text));
    em.inputs["generators"] = parse_int_list(gens_text);
    rep = semigroup_power_scaling_check(parse_semigroup_ideal(s, i_ref), k_max, fit);
  } else {
    const RingDocument doc = load_ring(opts);
    em.inputs["ring_document"] = doc.source;
    em.inputs["i"] = i_ref;
    rep = power_scaling_check(resolve_ideal(doc, i_ref),
                              parse_module(doc, module_ref), k_max, fit);
  }
  for (const ScalingRow& row : rep.rows)
    em.text << "k=" << row.k << "  e0=" << row.e0 << " (expect " << row.e0_expected
            << ")  e1=" << row.e1 << " (expect " << row.e1_expected << ")  "
            << (row.ok ? "PASS" : "FAIL") << "\n";
  return em.finish(to_json(rep), rep.all_ok ? 0 : 3);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hilbert coefficient workbench"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string q_ref, k_ref, module_ref, kind = "e", mode, gens_text, i_ref, lh_text;
  int index = 1, k_max = 3, n_check = 6;
  long long i_m = -1;

  const auto add_common = [&](CLI::App* cmd, bool needs_ring) {
    if (needs_ring)
      cmd->add_option("--ring", opts.ring_file, "ring document file")->required();
    cmd->add_flag("--json", opts.json_out, "emit the JSON report document");
    cmd->add_option("--char", opts.characteristic,
                    "default characteristic when the document omits it");
    cmd->add_option("--budget", opts.budget, "S-pair budget");
    cmd->add_option("--nmax", opts.n_max, "postulation search horizon");
    cmd->add_option("--seed", opts.seed, "sampler seed");
    cmd->add_option("--samples", opts.samples, "sample count");
  };

  CLI::App* length = app.add_subcommand("length", "l(R/Q) via the staircase");
  add_common(length, true);
  length->add_option("--q", q_ref, "ideal: name, m, or inline generators")->required();

  CLI::App* coeffs = app.add_subcommand("coeffs", "coefficient vectors e/g/f");
  add_common(coeffs, true);
  coeffs->add_option("--q", q_ref)->required();
  coeffs->add_option("--k", k_ref);
  coeffs->add_option("--module", module_ref, "R, R/<ideal>, or <ideal>");
  coeffs->add_option("--kind", kind, "e | g | f");

  CLI::App* identities = app.add_subcommand("identities", "exact identity suite");
  add_common(identities, true);
  identities->add_option("--k", k_ref)->required();
  identities->add_option("--q", q_ref)->required();

  CLI::App* iinv = app.add_subcommand("i-invariant", "I(Q;M) = l(M/QM) - e0");
  add_common(iinv, true);
  iinv->add_option("--q", q_ref)->required();
  iinv->add_option("--module", module_ref);

  CLI::App* explore = app.add_subcommand("explore", "seeded set exploration");
  add_common(explore, true);
  explore->add_option("mode", mode, "lambda | delta | bounds | probe")->required();
  explore->add_option("--k", k_ref);
  explore->add_option("--module", module_ref);
  explore->add_option("--i", index, "coefficient index");
  explore->add_option("--q", q_ref, "explicit ideal instead of sampling");
  explore->add_option("--lh", lh_text, "cohomology lengths l(H^0),...,l(H^{d-1})");
  explore->add_option("--im", i_m, "I(M) bound");
  explore->add_option("--ncheck", n_check, "envelope range 0..ncheck");

  CLI::App* semigroup = app.add_subcommand("semigroup", "one-dimensional lab");
  add_common(semigroup, false);
  semigroup->add_option("mode", mode, "info | e1 | delta | oversemigroups")->required();
  semigroup->add_option("--gens", gens_text, "semigroup generators")->required();
  semigroup->add_option("--k", k_ref, "ideal: m or integer list");
  semigroup->add_option("--i", i_ref, "ideal: m or integer list");

  CLI::App* scaling = app.add_subcommand("scaling", "e_i(I^k) power laws");
  add_common(scaling, false);
  scaling->add_option("--ring", opts.ring_file, "ring document file");
  scaling->add_option("--gens", gens_text, "semigroup generators");
  scaling->add_option("--i", i_ref, "ideal I");
  scaling->add_option("--module", module_ref);
  scaling->add_option("--kmax", k_max, "check k = 1..kmax");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  Emitter em;
  em.json_out = opts.json_out;
  for (int i = 1; i < argc; ++i) em.command.push_back(argv[i]);

  try {
    if (length->parsed()) return run_length(opts, q_ref, em);
    if (coeffs->parsed()) return run_coeffs(opts, q_ref, k_ref, module_ref, kind, em);
    if (identities->parsed()) return run_identities(opts, k_ref, q_ref, em);
    if (iinv->parsed()) return run_i_invariant(opts, q_ref, module_ref, em);
    if (explore->parsed())
      return run_explore(opts, mode, k_ref, module_ref, index, q_ref, lh_text, i_m,
                         n_check, em);
    if (semigroup->parsed())
      return run_semigroup(opts, mode, gens_text, k_ref, i_ref, em);
    if (scaling->parsed()) {
      if (gens_text.empty() && opts.ring_file.empty())
        throw DomainError("scaling needs --ring or --gens");
      if (i_ref.empty()) i_ref = "m";
      return run_scaling(opts, gens_text, i_ref, module_ref, k_max, em);
    }
    return em.fail("usage", "no subcommand", 1);
  } catch (const InternalError& e) {
    return em.fail("engine-defect", e.what(), 3);
  } catch (const PostulationError& e) {
    return em.fail("postulation", e.what(), 2);
  } catch (const BudgetError& e) {
    return em.fail("budget", e.what(), 2);
  } catch (const ParseError& e) {
    return em.fail("parse", e.what(), 1);
  } catch (const DomainError& e) {
    return em.fail("input", e.what(), 1);
  } catch (const std::exception& e) {
    return em.fail("internal", e.what(), 3);
  }
}
