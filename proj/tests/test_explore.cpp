#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb/explore.hpp"
#include "hilb/parse.hpp"
#include "hilb/report.hpp"

using namespace hilb;

namespace {

RingDocument poly2() { return parse_ring_document("char 32003; vars x,y; rel;"); }

RingDocument quadric_pair() {
  return parse_ring_document("char 32003; vars x,y,z,w; rel x*z, x*w, y*z, y*w;");
}

RingDocument idealization() {
  return parse_ring_document("char 32003; vars x,y,z; rel z^2, x*z;");
}

std::vector<IdealHandle> explicit_powers(const RingDocument& doc, int n_max) {
  std::vector<IdealHandle> out;
  for (int n = 1; n <= n_max; ++n)
    out.push_back(resolve_ideal(doc, "x^" + std::to_string(n) + ", y^" +
                                         std::to_string(n)));
  return out;
}

} // namespace

TEST_CASE("sampled ideals are validated parameter ideals") {
  const RingDocument qp = quadric_pair();
  SamplerConfig cfg;
  cfg.seed = 11;
  cfg.sample_count = 12;
  const auto qs = sample_parameter_ideals(qp.ring, cfg);
  REQUIRE(qs.size() == 12);
  for (const IdealHandle& q : qs) {
    CHECK(q.is_parameter());
    CHECK(q.quotient_dimension() == 0);
    CHECK(static_cast<int>(q.gens().size()) == 2);
  }
}

TEST_CASE("delta sampling keeps generators inside K") {
  const RingDocument doc = poly2();
  const IdealHandle k = resolve_ideal(doc, "x^2, x*y, y^2");
  SamplerConfig cfg;
  cfg.seed = 3;
  cfg.sample_count = 6;
  cfg.require_subset_of_k = true;
  cfg.power_min = 2;
  cfg.power_max = 3;
  const auto qs = sample_parameter_ideals(doc.ring, cfg, &k);
  for (const IdealHandle& q : qs) {
    CHECK(q.is_parameter());
    for (const Polynomial& g : q.gens()) CHECK(k.contains(g));
  }
}

TEST_CASE("pure single-variable draws on the quadric pair are degenerate") {
  // (x, y) cuts out the whole plane V(z,w): dimension 2, never accepted.
  const RingDocument qp = quadric_pair();
  const IdealHandle pure = resolve_ideal(qp, "x, y");
  CHECK(pure.quotient_dimension() == 2);
  CHECK_FALSE(pure.is_parameter());
  const IdealHandle mixed = resolve_ideal(qp, "x + z, y + w");
  CHECK(mixed.is_parameter());
}

TEST_CASE("lambda sets over the ideal module") {
  // For the Buchsbaum quadric pair every Q is standard for m, so
  // Lambda_1(m) = {e_1(Q, m)} = {-2} (lH^1(m) = 2).
  const RingDocument qp = quadric_pair();
  const IdealHandle m = resolve_ideal(qp, "m");
  SamplerConfig cfg;
  cfg.seed = 13;
  cfg.sample_count = 6;
  const auto qs = sample_parameter_ideals(qp.ring, cfg);
  const ExplorationReport rep =
      explore_samuel_set(qp.ring, ModuleSpec::ideal_module(m), 1, qs, cfg.seed);
  CHECK(rep.observed == std::vector<long long>{-2});
  CHECK(rep.classification == "constant");
}

TEST_CASE("sampling in dimension zero fails") {
  const RingDocument pt = parse_ring_document("char 32003; vars x; rel x^2;");
  SamplerConfig cfg;
  CHECK_THROWS_AS(sample_parameter_ideals(pt.ring, cfg), DomainError);
}

TEST_CASE("reproducibility: same seed, same report") {
  const RingDocument qp = quadric_pair();
  const IdealHandle m = resolve_ideal(qp, "m");
  SamplerConfig cfg;
  cfg.seed = 99;
  cfg.sample_count = 4;
  const auto qs1 = sample_parameter_ideals(qp.ring, cfg);
  const auto qs2 = sample_parameter_ideals(qp.ring, cfg);
  const auto rep1 = explore_relative_set(m, 1, qs1, cfg.seed);
  const auto rep2 = explore_relative_set(m, 1, qs2, cfg.seed);
  CHECK(to_json(rep1).dump() == to_json(rep2).dump());

  cfg.seed = 100;
  const auto qs3 = sample_parameter_ideals(qp.ring, cfg);
  bool same_gens = qs3.size() == qs1.size();
  for (std::size_t i = 0; same_gens && i < qs3.size(); ++i)
    same_gens = qs3[i].gens() == qs1[i].gens();
  CHECK_FALSE(same_gens);
}

TEST_CASE("lambda over the plane is the singleton -1") {
  const RingDocument doc = poly2();
  const IdealHandle m = resolve_ideal(doc, "m");
  SamplerConfig cfg;
  cfg.seed = 5;
  cfg.sample_count = 10;
  const auto qs = sample_parameter_ideals(doc.ring, cfg);
  const ExplorationReport rep = explore_relative_set(m, 1, qs, cfg.seed);
  CHECK(rep.observed == std::vector<long long>{-1});
  CHECK(rep.classification == "constant");
  CHECK(rep.violations.empty());
}

TEST_CASE("buchsbaum constancy of Lambda_1 on the quadric pair") {
  const RingDocument qp = quadric_pair();
  SamplerConfig cfg;
  cfg.seed = 7;
  cfg.sample_count = 8;
  const auto qs = sample_parameter_ideals(qp.ring, cfg);
  const ExplorationReport rep =
      explore_samuel_set(qp.ring, ModuleSpec::ring(), 1, qs, cfg.seed);
  CHECK(rep.observed == std::vector<long long>{-1});
  CHECK(rep.classification == "constant");
}

TEST_CASE("goto-ozeki growth of Lambda_1(A)") {
  const RingDocument a = idealization();
  const auto qs = explicit_powers(a, 4);
  const ExplorationReport rep = explore_samuel_set(a.ring, ModuleSpec::ring(), 1, qs, 0);
  CHECK(rep.observed == std::vector<long long>{-4, -3, -2, -1});
  CHECK(rep.classification == "growing-in-window");
}

TEST_CASE("g1 bounds") {
  // Quadric pair with lH^1 = 1: bound [-2, 0]; plane with all lH = 0: [-1, 0].
  const RingDocument qp = quadric_pair();
  const IdealHandle mq = resolve_ideal(qp, "m");
  SamplerConfig cfg;
  cfg.seed = 21;
  cfg.sample_count = 5;
  const auto qs = sample_parameter_ideals(qp.ring, cfg);
  const std::vector<long long> lh = {0, 1};
  const G1BoundReport rep = check_g1_bounds(mq, qs, lh, cfg.seed);
  CHECK(rep.lower_bound == -2);
  CHECK(rep.all_within);
  CHECK(rep.base.observed == std::vector<long long>{-2}); // g_1^m = -2 for Buchsbaum

  const RingDocument doc = poly2();
  const IdealHandle m = resolve_ideal(doc, "m");
  const auto qs2 = sample_parameter_ideals(doc.ring, cfg);
  const std::vector<long long> zero = {0, 0};
  const G1BoundReport rep2 = check_g1_bounds(m, qs2, zero, cfg.seed);
  CHECK(rep2.lower_bound == -1);
  CHECK(rep2.all_within);
  CHECK(rep2.base.observed == std::vector<long long>{-1});
}

TEST_CASE("growth envelope") {
  const RingDocument doc = poly2();
  const IdealHandle q = resolve_ideal(doc, "x^2, y^3");
  // Cohen-Macaulay with I_M = 0: the envelope collapses to an equality chain.
  const EnvelopeReport cm = check_growth_envelope(q, ModuleSpec::ring(), 0, 6);
  CHECK(cm.all_ok);
  CHECK(cm.e0 == 6);
  for (const EnvelopeRow& row : cm.rows) CHECK(row.deviation == 0);

  const RingDocument qp = quadric_pair();
  const IdealHandle qq = resolve_ideal(qp, "x + z, y + w");
  const EnvelopeReport bq = check_growth_envelope(qq, ModuleSpec::ring(), 1, 6);
  CHECK(bq.all_ok);
  CHECK(bq.e0 == 2);

  // Deliberately wrong I_M = 0 must be flagged at n = 0:
  // l(R/Q) - e_0 = 3 - 2 = 1 > 0.
  const EnvelopeReport wrong = check_growth_envelope(qq, ModuleSpec::ring(), 0, 6);
  CHECK_FALSE(wrong.all_ok);
  CHECK_FALSE(wrong.rows[0].ok);
}

TEST_CASE("e1 bound") {
  const RingDocument qp = quadric_pair();
  SamplerConfig cfg;
  cfg.seed = 31;
  cfg.sample_count = 5;
  const auto qs = sample_parameter_ideals(qp.ring, cfg);
  CHECK(check_e1_bound(qp.ring, ModuleSpec::ring(), 1, qs, cfg.seed).violations.empty());

  const RingDocument doc = poly2();
  const auto qs2 = sample_parameter_ideals(doc.ring, cfg);
  CHECK(check_e1_bound(doc.ring, ModuleSpec::ring(), 0, qs2, cfg.seed).violations.empty());

  // The idealization has no finite I(M): a finite guess gets violated, and the
  // sweep keeps going (violations accumulate, nothing aborts).
  const RingDocument a = idealization();
  const auto qs3 = explicit_powers(a, 4);
  const ExplorationReport rep = check_e1_bound(a.ring, ModuleSpec::ring(), 2, qs3, 0);
  CHECK(rep.violations.size() == 2); // n = 3, 4 exceed |e_1| = 2
  CHECK(rep.samples.size() == 4);
}

TEST_CASE("scaling law on the plane") {
  const RingDocument doc = poly2();
  const IdealHandle m = resolve_ideal(doc, "m");
  const ScalingReport rep = power_scaling_check(m, ModuleSpec::ring(), 3);
  CHECK(rep.all_ok);
  CHECK(rep.r == 2);
  REQUIRE(rep.rows.size() == 3);
  for (const ScalingRow& row : rep.rows) {
    CHECK(row.e0 == static_cast<long long>(row.k) * row.k);
    CHECK(row.e1 == static_cast<long long>(row.k) * (row.k - 1) / 2);
  }
}

TEST_CASE("scaling law beyond the Cohen-Macaulay case") {
  // Quadric pair, I = m: l(R/m^n) = n^2 + n - 1 gives e = (2, 0, -1), and the
  // law forces e_1(m^k) = k^2 - k.
  const RingDocument qp = quadric_pair();
  const ScalingReport rep =
      power_scaling_check(resolve_ideal(qp, "m"), ModuleSpec::ring(), 3);
  CHECK(rep.all_ok);
  CHECK(rep.base_e0 == 2);
  CHECK(rep.base_e1 == 0);
  for (const ScalingRow& row : rep.rows)
    CHECK(row.e1 == static_cast<long long>(row.k) * row.k - row.k);

  // Ideal module over the plane: base e(m, m) = (1, -1, 0).
  const RingDocument doc = poly2();
  const IdealHandle m = resolve_ideal(doc, "m");
  const ScalingReport mod =
      power_scaling_check(m, ModuleSpec::ideal_module(m), 3);
  CHECK(mod.all_ok);
  CHECK(mod.base_e1 == -1);
}

TEST_CASE("delta family stays inside lambda") {
  const RingDocument qp = quadric_pair();
  const IdealHandle m = resolve_ideal(qp, "m");
  SamplerConfig cfg;
  cfg.seed = 61;
  cfg.sample_count = 6;
  cfg.require_subset_of_k = true;
  cfg.power_min = 2; // linear forms never lie in m^2
  cfg.power_max = 2;
  const IdealHandle k2 = ideal_power(m, 2);
  const auto qs = sample_parameter_ideals(qp.ring, cfg, &k2);
  const ExplorationReport delta = explore_relative_set(k2, 1, qs, cfg.seed);
  // Buchsbaum ring: the delta set is a singleton too.
  CHECK(delta.observed.size() == 1);
  CHECK(delta.classification == "constant");
}

TEST_CASE("postulation failures are per-sample notes, not fatal") {
  const RingDocument qp = quadric_pair();
  const IdealHandle m = resolve_ideal(qp, "m");
  SamplerConfig cfg;
  cfg.seed = 3;
  cfg.sample_count = 3;
  const auto qs = sample_parameter_ideals(qp.ring, cfg);
  FitOptions tiny;
  tiny.n_max = 5; // d = 2 needs n0 + 7 <= n_max, impossible
  const ExplorationReport rep = explore_relative_set(m, 1, qs, cfg.seed, tiny);
  CHECK(rep.observed.empty());
  CHECK(rep.samples.size() == 3);
  for (const SampleRecord& rec : rep.samples) {
    CHECK_FALSE(rec.value.has_value());
    CHECK(rec.note.find("postulation") != std::string::npos);
  }
}

TEST_CASE("buchsbaum probe") {
  const RingDocument qp = quadric_pair();
  const IdealHandle m = resolve_ideal(qp, "m");
  SamplerConfig cfg;
  cfg.seed = 43;
  cfg.sample_count = 6;
  const auto qs = sample_parameter_ideals(qp.ring, cfg);
  const ProbeReport rep = buchsbaum_probe(m, qs, cfg.seed);
  CHECK(rep.i_ring_constant);
  CHECK(rep.gap_is_d_minus_1);
  CHECK(rep.qk_colength_matches);
  CHECK(rep.violations.empty());
  for (const ProbeRow& row : rep.rows) {
    CHECK(row.i_q_ring == 1);
    CHECK(row.i_q_max - row.i_q_ring == 1);   // d - 1
    CHECK(row.len_q_qk == 2);                 // d * l(R/m)
  }

  // On the plane: l(Q/Qm) = 2 = d * l(R/m) and I(Q;R) = 0.
  const RingDocument doc = poly2();
  const IdealHandle pm = resolve_ideal(doc, "m");
  const auto qs2 = sample_parameter_ideals(doc.ring, cfg);
  const ProbeReport rep2 = buchsbaum_probe(pm, qs2, cfg.seed);
  CHECK(rep2.qk_colength_matches);
  CHECK(rep2.i_ring_constant);
  for (const ProbeRow& row : rep2.rows) CHECK(row.i_q_ring == 0);

  // Idealization: I(Q;R) grows, constancy must be reported broken.
  const RingDocument a = idealization();
  const IdealHandle am = resolve_ideal(a, "m");
  const ProbeReport rep3 = buchsbaum_probe(am, explicit_powers(a, 3), 0);
  CHECK_FALSE(rep3.i_ring_constant);
}

TEST_CASE("exploration reports serialize deterministically") {
  const RingDocument doc = poly2();
  const IdealHandle m = resolve_ideal(doc, "m");
  SamplerConfig cfg;
  cfg.seed = 2;
  cfg.sample_count = 3;
  const auto qs = sample_parameter_ideals(doc.ring, cfg);
  const ExplorationReport rep = explore_relative_set(m, 1, qs, cfg.seed);
  const nlohmann::json j = to_json(rep);
  CHECK(j["observed"] == nlohmann::json::array({-1}));
  // Round trip through text.
  CHECK(nlohmann::json::parse(j.dump()) == j);
}
