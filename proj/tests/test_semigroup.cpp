#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hilb/explore.hpp"
#include "hilb/semigroup.hpp"

using namespace hilb;

namespace {

NumericalSemigroup s345() { return NumericalSemigroup::from_generators({3, 4, 5}); }

} // namespace

TEST_CASE("semigroup construction") {
  const NumericalSemigroup s = s345();
  CHECK(s.gaps() == std::vector<long long>{1, 2});
  CHECK(s.frobenius() == 2);
  CHECK(s.conductor() == 3);
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(2));
  CHECK(s.contains(7));
  CHECK(s.minimal_generators() == std::vector<long long>{3, 4, 5});

  const NumericalSemigroup whole = NumericalSemigroup::from_generators({1});
  CHECK(whole.gaps().empty());
  CHECK(whole.frobenius() == -1);

  CHECK(NumericalSemigroup::from_generators({2, 3}).gaps() ==
        std::vector<long long>{1});

  CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}), DomainError);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), DomainError);
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps({2}), DomainError); // 1+1=2 missing... 2 gap, 1 present
}

TEST_CASE("gap-set constructor round trip") {
  const NumericalSemigroup s = NumericalSemigroup::from_gaps({1, 2});
  CHECK(s == s345());
  CHECK(NumericalSemigroup::from_gaps({}).frobenius() == -1);
  // {1} closed: 2=1+1 must be present, 1 absent: fine.
  CHECK(NumericalSemigroup::from_gaps({1}).minimal_generators() ==
        std::vector<long long>{2, 3});
}

TEST_CASE("ideal elements and sumsets") {
  const NumericalSemigroup s = s345();
  const SemigroupIdeal m = SemigroupIdeal::maximal(s);
  CHECK(m.min() == 3);
  CHECK(m.elements().contains(3));
  CHECK_FALSE(m.elements().contains(6) == false); // 6 = 3+3

  const SemigroupIdeal m2 = sumset(m, m);
  for (long long n : {6, 7, 8, 9, 10})
    CHECK(m2.elements().contains(n));
  CHECK_FALSE(m2.elements().contains(5));

  // k_fold(m,k) = {3k, 3k+1, ...}: brute-force comparison up to k = 6.
  for (int k = 1; k <= 6; ++k) {
    const SemigroupIdeal mk = k_fold(m, k);
    for (long long n = 0; n <= 3 * k + 10; ++n)
      CHECK(mk.elements().contains(n) == (n >= 3 * k));
  }

  CHECK(scale_shift(m2, 3) == m);
  CHECK_THROWS_AS(scale_shift(m, 5), DomainError);
}

TEST_CASE("quotient lengths") {
  const NumericalSemigroup s = s345();
  const SemigroupIdeal r = SemigroupIdeal::ring(s);
  const SemigroupIdeal m = SemigroupIdeal::maximal(s);
  CHECK(length_quotient(r.elements(), m.elements()) == 1);

  // l(naturals / S) = #gaps = 2.
  const StableSet naturals(std::vector<bool>{}, 0);
  CHECK(length_quotient(naturals, s.stable_set()) == 2);

  // l(S / m^2) = #{0,3,4,5} = 4.
  CHECK(length_quotient(r.elements(), k_fold(m, 2).elements()) == 4);

  CHECK_THROWS_AS(length_quotient(m.elements(), r.elements()), DomainError);
}

TEST_CASE("minimal reductions") {
  const NumericalSemigroup s = s345();
  const SemigroupIdeal m = SemigroupIdeal::maximal(s);
  const ReductionInfo red = minimal_reduction(m);
  CHECK(red.x == 3);
  CHECK(red.e0 == 3);
  CHECK(red.reduction_number == 1); // m^2 = 3 + m

  const SemigroupIdeal principal(s, {4});
  CHECK(minimal_reduction(principal).reduction_number == 0);

  // Over the naturals {2,3,...} is already the principal ideal (2), so the
  // least s with E^{s+1} = x + E^s is s = 0.
  const NumericalSemigroup naturals = NumericalSemigroup::from_generators({1});
  const SemigroupIdeal e(naturals, {2, 3});
  const ReductionInfo red2 = minimal_reduction(e);
  CHECK(red2.x == 2);
  CHECK(red2.reduction_number == 0);
  CHECK(sumset(e, e).elements() == e.elements().shifted_up(2)); // E^2 = 2 + E too
}

TEST_CASE("blow-up e1 values") {
  const NumericalSemigroup s = s345();
  const SemigroupIdeal m = SemigroupIdeal::maximal(s);
  // S[m/3] = naturals, l(naturals/S) = 2.
  CHECK(e1_via_blowup(m, nullptr) == 2);
  // K = m: K[m/3] = m + naturals - 0 = m itself, so e1(m, K) = 0.
  CHECK(e1_via_blowup(m, &m) == 0);
  // Principal ideals are their own reductions.
  const SemigroupIdeal principal(s, {3});
  CHECK(e1_via_blowup(principal, nullptr) == 0);
}

TEST_CASE("interpolated coefficients match the blow-up route") {
  const NumericalSemigroup s = s345();
  const SemigroupIdeal m = SemigroupIdeal::maximal(s);
  const CoefficientVector e = semigroup_samuel_coeffs(m, nullptr);
  CHECK(e.values == std::vector<long long>{3, 2}); // l(S/m^n) = 3n - 2
  CHECK(e.values[0] == m.min());
  CHECK(e.values[1] == e1_via_blowup(m, nullptr));

  const CoefficientVector ek = semigroup_samuel_coeffs(m, &m);
  CHECK(ek.values[1] == e1_via_blowup(m, &m));
  CHECK(ek.values[0] == e.values[0]); // e0 agrees on the ideal module
}

TEST_CASE("postulation beyond the first argument is detected") {
  // <4,5,6>: l(S/m^n) = 4n - 4 holds only from n = 2 (n = 1 gives 1, not 0).
  const NumericalSemigroup s = NumericalSemigroup::from_generators({4, 5, 6});
  const SemigroupIdeal m = SemigroupIdeal::maximal(s);
  const CoefficientVector e = semigroup_samuel_coeffs(m, nullptr);
  CHECK(e.values == std::vector<long long>{4, 4});
  CHECK(e.postulation == 2);
  CHECK(e1_via_blowup(m, nullptr) == 4); // l(naturals/S) = #gaps
}

TEST_CASE("blow-up equals interpolation on random semigroups") {
  std::mt19937_64 rng(4242);
  int done = 0;
  while (done < 8) {
    std::vector<long long> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(3 + static_cast<long long>(rng() % 12));
    NumericalSemigroup s = [&]() -> NumericalSemigroup {
      try {
        return NumericalSemigroup::from_generators(gens);
      } catch (const DomainError&) {
        gens.push_back(gens.back() + 1); // force gcd 1
        return NumericalSemigroup::from_generators(gens);
      }
    }();
    if (s.gap_count() > 12 || s.gap_count() == 0) continue;
    ++done;

    for (int trial = 0; trial < 3; ++trial) {
      // Random m-primary ideal: a couple of nonzero elements of S.
      std::vector<long long> igens;
      for (int j = 0; j < 2; ++j) {
        long long v = 1 + static_cast<long long>(rng() % (2 * s.conductor() + 4));
        while (!s.contains(v) || v == 0) ++v;
        igens.push_back(v);
      }
      const SemigroupIdeal ideal(s, igens);
      const SemigroupIdeal max = SemigroupIdeal::maximal(s);

      const CoefficientVector e = semigroup_samuel_coeffs(ideal, nullptr);
      CHECK(e.values[0] == ideal.min());
      CHECK(e.values[1] == e1_via_blowup(ideal, nullptr));

      const CoefficientVector ek = semigroup_samuel_coeffs(ideal, &max);
      CHECK(ek.values[1] == e1_via_blowup(ideal, &max));
    }
  }
}

TEST_CASE("oversemigroup enumeration") {
  const auto over = oversemigroups(s345());
  REQUIRE(over.size() == 3);
  CHECK(over[0].gaps() == std::vector<long long>{1, 2}); // S itself first
  CHECK(over[1].gaps() == std::vector<long long>{1});
  CHECK(over[2].gaps().empty());                          // the naturals

  CHECK(oversemigroups(NumericalSemigroup::from_generators({1})).size() == 1);
  CHECK(oversemigroups(NumericalSemigroup::from_generators({2, 3})).size() == 2);

  // 23 gaps for <2, 47>: over the default cap.
  CHECK_THROWS_AS(oversemigroups(NumericalSemigroup::from_generators({2, 47})),
                  BudgetError);
}

TEST_CASE("oversemigroups are exactly the closed gap subsets") {
  // Independent brute force on a slightly larger example.
  const NumericalSemigroup s = NumericalSemigroup::from_generators({4, 5, 7});
  const auto over = oversemigroups(s);
  std::set<std::vector<long long>> got;
  for (const auto& b : over) got.insert(b.gaps());

  const std::vector<long long> gaps = s.gaps(); // {1,2,3,6}
  REQUIRE(gaps.size() == 4);
  std::set<std::vector<long long>> expected;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<long long> kept;
    for (unsigned j = 0; j < 4; ++j)
      if ((mask & (1u << j)) == 0) kept.push_back(gaps[j]);
    const auto member = [&](long long n) {
      return n >= 0 && std::find(kept.begin(), kept.end(), n) == kept.end();
    };
    bool closed = true;
    for (long long a = 1; a <= s.frobenius() && closed; ++a)
      for (long long b = a; a + b <= s.frobenius() && closed; ++b)
        if (member(a) && member(b)) closed = member(a + b);
    if (closed) expected.insert(kept);
  }
  CHECK(got == expected);
}

TEST_CASE("delta sets of the running example") {
  const NumericalSemigroup s = s345();
  const SemigroupIdeal m = SemigroupIdeal::maximal(s);
  const DeltaReport rep = delta_sets(s, m);

  CHECK(rep.delta_k_values == std::vector<long long>{-1});
  CHECK(rep.delta_r_values == std::vector<long long>{0, 1, 2});
  CHECK(rep.sup_delta_k == -1);
  CHECK(rep.sup_ok);
  CHECK(rep.inf_delta_r == 0);
  CHECK(rep.inf_ok);
  CHECK(rep.len_r_mod_k == 1);

  // Witness reproducibility: recompute each delta value from its gap set.
  for (const DeltaValue& v : rep.delta_k) {
    const NumericalSemigroup b = NumericalSemigroup::from_gaps(v.witness_gaps);
    const StableSet kb = m.elements().plus(b.stable_set());
    CHECK(length_quotient(kb, m.elements()) - rep.len_r_mod_k == v.value);
  }
}

TEST_CASE("delta over the naturals") {
  // S = naturals, K = (c): delta^K = {-c}.
  const NumericalSemigroup naturals = NumericalSemigroup::from_generators({1});
  for (long long c : {1, 2, 5}) {
    const SemigroupIdeal k(naturals, {c});
    const DeltaReport rep = delta_sets(naturals, k);
    CHECK(rep.delta_k_values == std::vector<long long>{-c});
    CHECK(rep.sup_ok);
  }
}

TEST_CASE("g1 bridge both directions") {
  const NumericalSemigroup s = s345();
  const SemigroupIdeal m = SemigroupIdeal::maximal(s);
  // g_1^m(m) = e_1(m, m-module) - l(R/m) = 0 - 1 = -1.
  CHECK(semigroup_relative_g1(s, m, m) == -1);

  // Every delta value is realized by the witness ideal x + B.
  const DeltaReport rep = delta_sets(s, m);
  for (const DeltaValue& v : rep.delta_k) {
    const NumericalSemigroup b = NumericalSemigroup::from_gaps(v.witness_gaps);
    const SemigroupIdeal i = witness_ideal(s, b);
    CHECK(i.is_integral());
    CHECK(semigroup_relative_g1(s, m, i) == v.value);
  }

  // And on a second semigroup with a non-maximal K.
  const NumericalSemigroup s2 = NumericalSemigroup::from_generators({4, 5, 7});
  const SemigroupIdeal k2(s2, {4, 7});
  const DeltaReport rep2 = delta_sets(s2, k2);
  for (const DeltaValue& v : rep2.delta_k) {
    const NumericalSemigroup b = NumericalSemigroup::from_gaps(v.witness_gaps);
    CHECK(semigroup_relative_g1(s2, k2, witness_ideal(s2, b)) == v.value);
  }
}

TEST_CASE("scaling law in dimension one") {
  const NumericalSemigroup s = s345();
  const SemigroupIdeal m = SemigroupIdeal::maximal(s);
  const ScalingReport rep = semigroup_power_scaling_check(m, 4);
  CHECK(rep.all_ok);
  for (const ScalingRow& row : rep.rows) {
    CHECK(row.e0 == 3 * row.k);
    CHECK(row.e1 == 2);
  }

  // Random semigroups, k = 1..4.
  std::mt19937_64 rng(17);
  for (long long a = 0; a < 4; ++a) {
    const long long g1 = 3 + static_cast<long long>(rng() % 5);
    const NumericalSemigroup sr = NumericalSemigroup::from_generators({g1, g1 + 1});
    const SemigroupIdeal mr = SemigroupIdeal::maximal(sr);
    CHECK(semigroup_power_scaling_check(mr, 4).all_ok);
  }
}
