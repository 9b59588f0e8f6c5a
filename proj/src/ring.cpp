#include "hilb/ring.hpp"

#include <algorithm>
#include <set>

namespace hilb {

QuotientRingPtr QuotientRing::create(RingCtxPtr ctx, std::vector<Polynomial> relations,
                                     GroebnerOptions opts) {
  for (const Polynomial& f : relations)
    if (f.ctx() != ctx) throw DomainError("relation from a different ring context");
  return std::shared_ptr<const QuotientRing>(
      new QuotientRing(std::move(ctx), std::move(relations), opts));
}

const std::vector<Polynomial>& QuotientRing::relation_groebner() const {
  std::lock_guard lock(mu_);
  if (!gb_) gb_ = reduced_groebner(relations_, opts_);
  return *gb_;
}

int QuotientRing::dimension() const {
  const std::vector<Polynomial>& gb = relation_groebner();
  std::lock_guard lock(mu_);
  if (!dim_) {
    std::vector<Monomial> lts;
    lts.reserve(gb.size());
    for (const Polynomial& g : gb) lts.push_back(g.leading_monomial());
    dim_ = monomial_ideal_dimension(lts, ctx_->nvars());
  }
  return *dim_;
}

namespace {

// Standard monomials of J that lie inside LT(Jsat), grouped per minimal
// generator b of LT(Jsat) as b * std(LT(J) : b) and deduplicated.
long long torsion_count(const std::vector<Monomial>& lt_j,
                        const std::vector<Monomial>& lt_sat, int nvars) {
  struct ExpLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      for (int v = 0; v < a.nvars(); ++v)
        if (a.exponent(v) != b.exponent(v)) return a.exponent(v) < b.exponent(v);
      return false;
    }
  };
  std::set<Monomial, ExpLess> seen;
  for (const Monomial& b : minimal_monomial_generators(lt_sat)) {
    std::vector<Monomial> colon;
    colon.reserve(lt_j.size());
    for (const Monomial& a : lt_j) {
      Monomial q(nvars);
      for (int v = 0; v < nvars; ++v)
        q.set_exponent(v, std::max(a.exponent(v) - b.exponent(v), 0));
      colon.push_back(std::move(q));
    }
    for (const Monomial& s : enumerate_standard_monomials(std::move(colon), nvars))
      seen.insert(b.times(s));
  }
  return static_cast<long long>(seen.size());
}

} // namespace

long long QuotientRing::h0_length() const {
  {
    std::lock_guard lock(mu_);
    if (h0_) return *h0_;
  }
  // J : m^∞ as the intersection of the single-variable saturations.
  const QuotientRingPtr self = shared_from_this();
  IdealHandle sat = ideal_saturation(zero_ideal(self), Polynomial::variable(ctx_, 0));
  for (int v = 1; v < ctx_->nvars(); ++v) {
    const IdealHandle sv =
        ideal_saturation(zero_ideal(self), Polynomial::variable(ctx_, v));
    sat = IdealHandle(self, ambient_intersection(sat.groebner(), sv.groebner(), opts_));
  }
  const long long count =
      torsion_count(zero_ideal(self).leading_monomials(), sat.leading_monomials(),
                    ctx_->nvars());
  std::lock_guard lock(mu_);
  if (!h0_) h0_ = count;
  return *h0_;
}

// --- IdealHandle -------------------------------------------------------------

IdealHandle::IdealHandle(QuotientRingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
  for (const Polynomial& f : gens_)
    if (f.ctx() != ring_->ctx()) throw DomainError("generator from a different ring");
  std::erase_if(gens_, [](const Polynomial& f) { return f.is_zero(); });
}

const std::vector<Polynomial>& IdealHandle::groebner() const {
  if (!cache_) throw DomainError("empty ideal handle");
  {
    std::lock_guard lock(cache_->mu);
    if (cache_->gb) return *cache_->gb;
  }
  std::vector<Polynomial> all = gens_;
  const std::vector<Polynomial>& rel = ring_->relation_groebner();
  all.insert(all.end(), rel.begin(), rel.end());
  std::vector<Polynomial> gb = reduced_groebner(std::move(all), ring_->options());
  std::lock_guard lock(cache_->mu);
  if (!cache_->gb) cache_->gb = std::move(gb);
  return *cache_->gb;
}

std::vector<Monomial> IdealHandle::leading_monomials() const {
  std::vector<Monomial> lts;
  for (const Polynomial& g : groebner()) lts.push_back(g.leading_monomial());
  return lts;
}

std::optional<long long> IdealHandle::quotient_length() const {
  return standard_monomial_count(leading_monomials(), ring_->ctx()->nvars());
}

int IdealHandle::quotient_dimension() const {
  const std::vector<Monomial> lts = leading_monomials();
  std::lock_guard lock(cache_->mu);
  if (!cache_->dim)
    cache_->dim = monomial_ideal_dimension(lts, ring_->ctx()->nvars());
  return *cache_->dim;
}

bool IdealHandle::is_m_primary() const { return quotient_dimension() <= 0; }

bool IdealHandle::is_parameter() const {
  return is_m_primary() && is_proper() &&
         static_cast<int>(gens_.size()) == ring_->dimension();
}

bool IdealHandle::is_proper() const {
  const std::vector<Polynomial>& gb = groebner();
  return gb.empty() || !gb.front().leading_monomial().is_one();
}

bool IdealHandle::contains(const Polynomial& f) const { return reduce(f).is_zero(); }

Polynomial IdealHandle::reduce(const Polynomial& f) const {
  if (f.ctx() != ring_->ctx()) throw DomainError("polynomial from a different ring");
  return normal_form(f, groebner());
}

// --- ideal algebra -----------------------------------------------------------

namespace {

void require_same_ring(const IdealHandle& a, const IdealHandle& b) {
  if (a.ring() != b.ring()) throw DomainError("ideals from different rings");
}

} // namespace

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const Polynomial& f : a.gens())
    for (const Polynomial& g : b.gens()) gens.push_back(f.times(g));
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_power(const IdealHandle& a, unsigned k) {
  if (k == 0) return unit_ideal(a.ring());
  IdealHandle cur = a;
  for (unsigned i = 1; i < k; ++i) {
    IdealHandle next = ideal_product(cur, a);
    // Interreduce: carry the reduced basis forward as the generator set.
    cur = IdealHandle(a.ring(), next.groebner());
  }
  return cur;
}

IdealHandle ideal_colon(const IdealHandle& a, const Polynomial& f) {
  if (f.ctx() != a.ring()->ctx()) throw DomainError("polynomial from a different ring");
  if (f.is_zero()) throw DomainError("colon by zero");
  return IdealHandle(a.ring(),
                     ambient_colon(a.groebner(), f, a.ring()->options()));
}

IdealHandle ideal_saturation(const IdealHandle& a, const Polynomial& f) {
  IdealHandle cur = a;
  while (true) {
    IdealHandle next = ideal_colon(cur, f);
    if (ideal_equal(next, cur)) return cur;
    cur = std::move(next);
  }
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a, b);
  const std::vector<Polynomial>& ga = a.groebner();
  const std::vector<Polynomial>& gb = b.groebner();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gb[i]) return false;
  return true;
}

IdealHandle maximal_ideal(const QuotientRingPtr& ring) {
  std::vector<Polynomial> gens;
  for (int v = 0; v < ring->ctx()->nvars(); ++v)
    gens.push_back(Polynomial::variable(ring->ctx(), v));
  return IdealHandle(ring, std::move(gens));
}

IdealHandle unit_ideal(const QuotientRingPtr& ring) {
  return IdealHandle(
      ring, {Polynomial::constant(ring->ctx(), ring->ctx()->field().one())});
}

IdealHandle zero_ideal(const QuotientRingPtr& ring) { return IdealHandle(ring, {}); }

} // namespace hilb
