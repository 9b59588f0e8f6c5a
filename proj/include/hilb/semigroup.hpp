#pragma once

#include <vector>

#include "hilb/fit.hpp"

namespace hilb {

/// A subset of the nonnegative integers that contains every n >= threshold.
/// All the one-dimensional module arithmetic (sumsets, quotient lengths,
/// blow-up stabilization) happens on these sets; finiteness of every reported
/// length is forced by the shared tails.
class StableSet {
public:
  StableSet() = default;

  /// members[i] decides membership of i for i < threshold; everything from
  /// threshold on is in the set.
  StableSet(std::vector<bool> members, long long threshold);

  bool contains(long long n) const {
    if (n < 0) return false;
    if (n >= threshold_) return true;
    return members_[static_cast<std::size_t>(n)];
  }

  long long threshold() const { return threshold_; }

  /// Least element; sets handled here are never empty.
  long long min() const;

  StableSet plus(const StableSet& o) const;           // sumset {a + b}
  StableSet shifted_down(long long c) const;          // {a - c}, c <= min()
  StableSet shifted_up(long long c) const;            // {a + c}

  friend bool operator==(const StableSet& a, const StableSet& b);
  friend bool operator!=(const StableSet& a, const StableSet& b) { return !(a == b); }

private:
  std::vector<bool> members_;
  long long threshold_ = 0;
};

/// #(E \ F) for F ⊆ E; throws DomainError when F is not contained in E.
long long length_quotient(const StableSet& e, const StableSet& f);

/// Cofinite additive submonoid of the nonnegative integers, stored by its
/// finite gap set. Closure under addition is verified exhaustively up to
/// twice the conductor at construction.
class NumericalSemigroup {
public:
  /// From coprime positive generators; gap sieve to a safe dynamic bound.
  static NumericalSemigroup from_generators(std::vector<long long> gens);
  /// From an explicit gap set; validates closure.
  static NumericalSemigroup from_gaps(std::vector<long long> gaps);

  const std::vector<long long>& generators() const { return gens_; }
  const std::vector<long long>& gaps() const { return gaps_; }
  long long frobenius() const { return frobenius_; }
  long long conductor() const { return frobenius_ + 1; }
  long long gap_count() const { return static_cast<long long>(gaps_.size()); }

  bool contains(long long n) const;
  StableSet stable_set() const;

  /// Elements that are not sums of two smaller nonzero elements.
  std::vector<long long> minimal_generators() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }

private:
  NumericalSemigroup() = default;

  std::vector<long long> gens_;
  std::vector<long long> gaps_; // sorted
  long long frobenius_ = -1;
};

/// An S-stable subset E = ∪ (v_j + S) of the nonnegative integers, kept with
/// its generator list. Generators need not lie in S (relative ideals are
/// allowed); ideals of the ring itself satisfy is_integral().
class SemigroupIdeal {
public:
  SemigroupIdeal(NumericalSemigroup owner, std::vector<long long> gens);

  /// The ring R viewed as the ideal generated by 0.
  static SemigroupIdeal ring(const NumericalSemigroup& s);
  /// The maximal ideal: all positive elements of S.
  static SemigroupIdeal maximal(const NumericalSemigroup& s);
  /// Wraps an explicit stable set, recomputing minimal generators.
  static SemigroupIdeal from_elements(NumericalSemigroup owner, StableSet elements);

  const NumericalSemigroup& owner() const { return owner_; }
  const std::vector<long long>& generators() const { return gens_; }
  const StableSet& elements() const { return elements_; }
  long long min() const { return elements_.min(); }

  bool is_integral() const;                 // gens ⊆ S
  bool is_m_primary() const { return min() >= 1 || gens_ == std::vector<long long>{0}; }

  friend bool operator==(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    return a.owner_ == b.owner_ && a.elements_ == b.elements_;
  }

private:
  NumericalSemigroup owner_;
  std::vector<long long> gens_;
  StableSet elements_;
};

SemigroupIdeal sumset(const SemigroupIdeal& e, const SemigroupIdeal& f);
/// k-fold sumset; k = 0 gives the ring.
SemigroupIdeal k_fold(const SemigroupIdeal& e, int k);
/// E - c elementwise; requires c <= min(E).
SemigroupIdeal scale_shift(const SemigroupIdeal& e, long long c);

struct ReductionInfo {
  long long x = 0;           // generator of the minimal reduction (x) = x + S
  int reduction_number = 0;  // least s with E^{s+1} = x + E^s
  long long e0 = 0;          // multiplicity = min(E)
};

/// The principal ideal of minimal valuation is a reduction in this model.
ReductionInfo minimal_reduction(const SemigroupIdeal& e);

/// e_1(I, M) as the length of N/M for the stabilized blow-up module
/// N = M[I/x], x the minimal reduction generator. M is the ring when
/// k_module is null.
long long e1_via_blowup(const SemigroupIdeal& i, const SemigroupIdeal* k_module);

/// e_0, e_1 of an m-primary ideal by degree-one interpolation of
/// n -> l(M/I^n M). Cross-checks the blow-up route in tests.
CoefficientVector semigroup_samuel_coeffs(const SemigroupIdeal& i,
                                          const SemigroupIdeal* k_module,
                                          const FitOptions& opts = {});

/// All semigroups between S and the naturals, by exhaustive search over gap
/// subsets with closure pruning. Sorted by gap count descending (S first).
/// Throws BudgetError when S has more than gap_cap gaps.
std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s,
                                               int gap_cap = 20);

struct DeltaValue {
  long long value = 0;
  std::vector<long long> witness_gaps; // gap set of the oversemigroup B
};

struct DeltaReport {
  std::vector<DeltaValue> delta_k;   // l(KB/K) - l(R/K), one row per B
  std::vector<DeltaValue> delta_r;   // l(B/R)
  std::vector<long long> delta_k_values; // sorted, deduplicated
  std::vector<long long> delta_r_values;
  long long len_r_mod_k = 0;
  long long sup_delta_k = 0;         // max over the enumerated family
  long long sup_check_rhs = 0;       // l(K·N/K) - l(R/K) over the naturals
  bool sup_ok = false;
  long long inf_delta_r = 0;
  bool inf_ok = false;               // 0, attained by B = S
};

/// The §5 set descriptions over the enumerated oversemigroups.
DeltaReport delta_sets(const NumericalSemigroup& s, const SemigroupIdeal& k);

/// g_1^K(I) = e_1(I,K) - l(R/K): the dimension-one bridge between the
/// relative coefficients and the blow-up lengths.
long long semigroup_relative_g1(const NumericalSemigroup& s, const SemigroupIdeal& k,
                                const SemigroupIdeal& i);

/// The ideal x + B (x a unit-free conductor element), whose g_1^K value
/// reproduces the delta entry witnessed by B.
SemigroupIdeal witness_ideal(const NumericalSemigroup& s, const NumericalSemigroup& b);

} // namespace hilb
