#include "hilb/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hilb {

// --- StableSet ----------------------------------------------------------------

StableSet::StableSet(std::vector<bool> members, long long threshold)
    : members_(std::move(members)), threshold_(threshold) {
  if (threshold_ < 0 || static_cast<long long>(members_.size()) < threshold_)
    throw InternalError("malformed stable set");
  members_.resize(static_cast<std::size_t>(threshold_));
}

long long StableSet::min() const {
  for (long long n = 0; n < threshold_; ++n)
    if (members_[static_cast<std::size_t>(n)]) return n;
  return threshold_;
}

StableSet StableSet::plus(const StableSet& o) const {
  const long long t = threshold_ + o.threshold_;
  std::vector<bool> out(static_cast<std::size_t>(t), false);
  const long long lo_self = min();
  const long long lo_other = o.min();
  for (long long a = lo_self; a < t; ++a) {
    if (!contains(a)) continue;
    for (long long b = lo_other; a + b < t; ++b)
      if (o.contains(b)) out[static_cast<std::size_t>(a + b)] = true;
  }
  return StableSet(std::move(out), t);
}

StableSet StableSet::shifted_down(long long c) const {
  if (c < 0 || c > min()) throw DomainError("shift below the minimal element");
  std::vector<bool> out;
  out.reserve(static_cast<std::size_t>(threshold_ - c));
  for (long long n = c; n < threshold_; ++n)
    out.push_back(members_[static_cast<std::size_t>(n)]);
  return StableSet(std::move(out), threshold_ - c);
}

StableSet StableSet::shifted_up(long long c) const {
  if (c < 0) throw DomainError("negative shift");
  std::vector<bool> out(static_cast<std::size_t>(threshold_ + c), false);
  for (long long n = 0; n < threshold_; ++n)
    if (members_[static_cast<std::size_t>(n)]) out[static_cast<std::size_t>(n + c)] = true;
  return StableSet(std::move(out), threshold_ + c);
}

bool operator==(const StableSet& a, const StableSet& b) {
  const long long h = std::max(a.threshold_, b.threshold_);
  for (long long n = 0; n < h; ++n)
    if (a.contains(n) != b.contains(n)) return false;
  return true;
}

long long length_quotient(const StableSet& e, const StableSet& f) {
  const long long h = std::max(e.threshold(), f.threshold());
  long long count = 0;
  for (long long n = 0; n < h; ++n) {
    const bool in_e = e.contains(n);
    const bool in_f = f.contains(n);
    if (in_f && !in_e) throw DomainError("length_quotient: F is not contained in E");
    if (in_e && !in_f) ++count;
  }
  return count;
}

// --- NumericalSemigroup ---------------------------------------------------------

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long long> gens) {
  if (gens.empty()) throw DomainError("empty generator list");
  for (long long g : gens)
    if (g <= 0) throw DomainError("semigroup generators must be positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  long long g = 0;
  for (long long v : gens) g = std::gcd(g, v);
  if (g != 1) throw DomainError("semigroup generators must have gcd 1");

  // F <= (min-1)(max-1) - 1 < max^2; sieve comfortably beyond it.
  const long long bound = 2 * gens.back() * gens.back() + 2;
  std::vector<bool> mem(static_cast<std::size_t>(bound), false);
  mem[0] = true;
  for (long long n = 1; n < bound; ++n)
    for (long long v : gens)
      if (n >= v && mem[static_cast<std::size_t>(n - v)]) {
        mem[static_cast<std::size_t>(n)] = true;
        break;
      }

  NumericalSemigroup s;
  s.gens_ = std::move(gens);
  for (long long n = 1; n < bound; ++n)
    if (!mem[static_cast<std::size_t>(n)]) s.gaps_.push_back(n);
  s.frobenius_ = s.gaps_.empty() ? -1 : s.gaps_.back();
  if (s.frobenius_ + 1 >= bound - s.gens_.back())
    throw InternalError("semigroup sieve bound too small");

  // Closure sanity check up to twice the conductor.
  for (long long a = 0; a <= 2 * s.conductor(); ++a)
    for (long long b = a; a + b <= 2 * s.conductor(); ++b)
      if (s.contains(a) && s.contains(b) && !s.contains(a + b))
        throw InternalError("semigroup closure violated");
  return s;
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<long long> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  for (long long g : gaps)
    if (g <= 0) throw DomainError("gaps must be positive");

  NumericalSemigroup s;
  s.gaps_ = std::move(gaps);
  s.frobenius_ = s.gaps_.empty() ? -1 : s.gaps_.back();
  const long long f = s.frobenius_;
  for (long long a = 1; a <= f; ++a) {
    if (!s.contains(a)) continue;
    for (long long b = a; a + b <= f; ++b)
      if (s.contains(b) && !s.contains(a + b))
        throw DomainError("gap set is not closed under addition");
  }
  s.gens_ = s.minimal_generators();
  return s;
}

bool NumericalSemigroup::contains(long long n) const {
  if (n < 0) return false;
  if (n > frobenius_) return true;
  return !std::binary_search(gaps_.begin(), gaps_.end(), n);
}

StableSet NumericalSemigroup::stable_set() const {
  const long long t = conductor();
  std::vector<bool> mem(static_cast<std::size_t>(t), false);
  for (long long n = 0; n < t; ++n)
    if (contains(n)) mem[static_cast<std::size_t>(n)] = true;
  return StableSet(std::move(mem), t);
}

std::vector<long long> NumericalSemigroup::minimal_generators() const {
  long long multiplicity = 1;
  for (long long n = 1; n <= conductor() + 1; ++n)
    if (contains(n)) {
      multiplicity = n;
      break;
    }
  std::vector<long long> out;
  for (long long e = 1; e <= conductor() + multiplicity; ++e) {
    if (!contains(e)) continue;
    bool decomposable = false;
    for (long long a = 1; a + a <= e && !decomposable; ++a)
      decomposable = contains(a) && contains(e - a) && a > 0 && e - a > 0;
    if (!decomposable) out.push_back(e);
  }
  return out;
}

// --- SemigroupIdeal -------------------------------------------------------------

SemigroupIdeal::SemigroupIdeal(NumericalSemigroup owner, std::vector<long long> gens)
    : owner_(std::move(owner)), gens_(std::move(gens)) {
  if (gens_.empty()) throw DomainError("semigroup ideal needs at least one generator");
  for (long long v : gens_)
    if (v < 0) throw DomainError("ideal generators must be nonnegative");
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());

  const long long t = gens_.front() + owner_.conductor();
  std::vector<bool> mem(static_cast<std::size_t>(t), false);
  for (long long v : gens_)
    for (long long n = v; n < t; ++n)
      if (owner_.contains(n - v)) mem[static_cast<std::size_t>(n)] = true;
  elements_ = StableSet(std::move(mem), t);
}

SemigroupIdeal SemigroupIdeal::ring(const NumericalSemigroup& s) {
  return SemigroupIdeal(s, {0});
}

SemigroupIdeal SemigroupIdeal::maximal(const NumericalSemigroup& s) {
  std::vector<long long> gens = s.generators();
  if (gens.empty() || gens.front() == 0) throw DomainError("maximal ideal of a field");
  return SemigroupIdeal(s, std::move(gens));
}

SemigroupIdeal SemigroupIdeal::from_elements(NumericalSemigroup owner, StableSet elements) {
  // Minimal generators: elements not reachable from a smaller element of the
  // set by adding a nonzero semigroup element.
  std::vector<long long> gens;
  const long long lo = elements.min();
  const long long hi = lo + owner.conductor() + 1;
  for (long long e = lo; e < hi; ++e) {
    if (!elements.contains(e)) continue;
    bool reachable = false;
    for (long long a = lo; a < e && !reachable; ++a)
      reachable = elements.contains(a) && owner.contains(e - a) && e - a > 0;
    if (!reachable) gens.push_back(e);
  }
  SemigroupIdeal out(std::move(owner), std::move(gens));
  if (out.elements_ != elements)
    throw InternalError("stable set is not an ideal over this semigroup");
  return out;
}

bool SemigroupIdeal::is_integral() const {
  for (long long v : gens_)
    if (!owner_.contains(v)) return false;
  return true;
}

namespace {

void require_same_owner(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  if (!(a.owner() == b.owner()))
    throw DomainError("ideals over different semigroups");
}

} // namespace

SemigroupIdeal sumset(const SemigroupIdeal& e, const SemigroupIdeal& f) {
  require_same_owner(e, f);
  std::vector<long long> gens;
  gens.reserve(e.generators().size() * f.generators().size());
  for (long long a : e.generators())
    for (long long b : f.generators()) gens.push_back(a + b);
  return SemigroupIdeal(e.owner(), std::move(gens));
}

SemigroupIdeal k_fold(const SemigroupIdeal& e, int k) {
  if (k < 0) throw DomainError("negative power");
  SemigroupIdeal acc = SemigroupIdeal::ring(e.owner());
  for (int i = 0; i < k; ++i) acc = sumset(acc, e);
  return acc;
}

SemigroupIdeal scale_shift(const SemigroupIdeal& e, long long c) {
  if (c > e.min()) throw DomainError("shift below zero");
  std::vector<long long> gens;
  gens.reserve(e.generators().size());
  for (long long v : e.generators()) gens.push_back(v - c);
  return SemigroupIdeal(e.owner(), std::move(gens));
}

ReductionInfo minimal_reduction(const SemigroupIdeal& e) {
  if (!e.is_m_primary() || !e.is_integral())
    throw DomainError("minimal reduction needs an m-primary integral ideal");
  ReductionInfo info;
  info.x = e.min();
  info.e0 = e.min();
  SemigroupIdeal power = SemigroupIdeal::ring(e.owner()); // E^0
  for (int s = 0;; ++s) {
    SemigroupIdeal next = sumset(power, e); // E^{s+1}
    const StableSet reduced = power.elements().shifted_up(info.x);
    if (next.elements() == reduced) {
      info.reduction_number = s;
      return info;
    }
    power = std::move(next);
    if (s > 4096) throw InternalError("reduction number runaway");
  }
}

namespace {

StableSet module_elements(const NumericalSemigroup& s, const SemigroupIdeal* k_module) {
  return k_module ? k_module->elements() : s.stable_set();
}

} // namespace

long long e1_via_blowup(const SemigroupIdeal& i, const SemigroupIdeal* k_module) {
  const NumericalSemigroup& s = i.owner();
  if (k_module) require_same_owner(i, *k_module);
  const ReductionInfo red = minimal_reduction(i);
  const StableSet m = module_elements(s, k_module);

  // N = (I^n M) / x^n for n past the reduction number; advance until stable.
  auto blowup_at = [&](int n) {
    const StableSet num = k_fold(i, n).elements().plus(m);
    return num.shifted_down(static_cast<long long>(n) * red.x);
  };
  int n = std::max(red.reduction_number, 1);
  StableSet cur = blowup_at(n);
  while (true) {
    StableSet next = blowup_at(n + 1);
    if (next == cur) break;
    cur = std::move(next);
    if (++n > 4096) throw InternalError("blow-up stabilization runaway");
  }
  return length_quotient(cur, m);
}

CoefficientVector semigroup_samuel_coeffs(const SemigroupIdeal& i,
                                          const SemigroupIdeal* k_module,
                                          const FitOptions& opts) {
  if (!i.is_m_primary() || !i.is_integral())
    throw DomainError("coefficients need an m-primary integral ideal");
  const StableSet m = module_elements(i.owner(), k_module);
  SeriesCache series([&](int n) {
    const StableSet sub = k_fold(i, n).elements().plus(m);
    return length_quotient(m, sub);
  });
  return fit_binomial_series(series, 1, 0, CoefficientVector::Kind::samuel, opts);
}

std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s, int gap_cap) {
  const std::vector<long long>& gaps = s.gaps();
  const int t = static_cast<int>(gaps.size());
  if (t > gap_cap)
    throw BudgetError("oversemigroup enumeration capped at " + std::to_string(gap_cap) +
                      " gaps, semigroup has " + std::to_string(t));

  std::vector<NumericalSemigroup> out;
  for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
    // Candidate keeps the gaps NOT selected by mask.
    std::vector<long long> kept;
    for (int j = 0; j < t; ++j)
      if ((mask & (1u << j)) == 0) kept.push_back(gaps[static_cast<std::size_t>(j)]);
    const auto member = [&](long long n) {
      return n >= 0 && !std::binary_search(kept.begin(), kept.end(), n);
    };
    bool closed = true;
    // Only sums of added ex-gaps with members can escape; sums beyond the
    // Frobenius number are members automatically.
    for (int j = 0; j < t && closed; ++j) {
      if ((mask & (1u << j)) == 0) continue;
      const long long a = gaps[static_cast<std::size_t>(j)];
      for (long long b = 1; a + b <= s.frobenius() && closed; ++b)
        if (member(b)) closed = member(a + b);
    }
    if (closed) out.push_back(NumericalSemigroup::from_gaps(kept));
  }
  std::sort(out.begin(), out.end(),
            [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
              if (a.gap_count() != b.gap_count()) return a.gap_count() > b.gap_count();
              return a.gaps() < b.gaps();
            });
  return out;
}

DeltaReport delta_sets(const NumericalSemigroup& s, const SemigroupIdeal& k) {
  if (!(k.owner() == s)) throw DomainError("ideal over a different semigroup");
  if (!k.is_m_primary() || !k.is_integral())
    throw DomainError("K must be an m-primary ideal of the semigroup ring");

  DeltaReport rep;
  rep.len_r_mod_k = length_quotient(s.stable_set(), k.elements());

  for (const NumericalSemigroup& b : oversemigroups(s)) {
    const StableSet kb = k.elements().plus(b.stable_set());
    const long long dk = length_quotient(kb, k.elements()) - rep.len_r_mod_k;
    const long long dr = length_quotient(b.stable_set(), s.stable_set());
    rep.delta_k.push_back({dk, b.gaps()});
    rep.delta_r.push_back({dr, b.gaps()});
    rep.delta_k_values.push_back(dk);
    rep.delta_r_values.push_back(dr);
  }
  const auto dedupe = [](std::vector<long long>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(rep.delta_k_values);
  dedupe(rep.delta_r_values);

  // sup Δ^K is attained at B = the naturals (the integral closure).
  StableSet naturals(std::vector<bool>{}, 0);
  rep.sup_delta_k = rep.delta_k_values.back();
  rep.sup_check_rhs =
      length_quotient(k.elements().plus(naturals), k.elements()) - rep.len_r_mod_k;
  rep.sup_ok = rep.sup_delta_k == rep.sup_check_rhs;

  // inf Δ_R is 0 for these Cohen-Macaulay domains, attained at B = S.
  rep.inf_delta_r = rep.delta_r_values.front();
  rep.inf_ok = rep.inf_delta_r == 0;
  return rep;
}

long long semigroup_relative_g1(const NumericalSemigroup& s, const SemigroupIdeal& k,
                                const SemigroupIdeal& i) {
  const long long len_rk = length_quotient(s.stable_set(), k.elements());
  return e1_via_blowup(i, &k) - len_rk;
}

SemigroupIdeal witness_ideal(const NumericalSemigroup& s, const NumericalSemigroup& b) {
  const long long x = std::max<long long>(s.conductor(), 1);
  return SemigroupIdeal::from_elements(s, b.stable_set().shifted_up(x));
}

} // namespace hilb
