#include "hilb/polynomial.hpp"

#include <algorithm>

namespace hilb {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ctx() != b.ctx()) throw DomainError("polynomials from different rings");
}

Polynomial::Polynomial(RingCtxPtr ctx, std::vector<Term> terms) : ctx_(std::move(ctx)) {
  const MonomialOrder& ord = ctx_->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(ord, a.monomial, b.monomial) > 0;
  });
  terms_.reserve(terms.size());
  const PrimeField& f = ctx_->field();
  for (Term& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff = f.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingCtxPtr ctx, FieldScalar c) {
  Polynomial r(ctx);
  if (!c.is_zero()) r.terms_.push_back({Monomial::one(ctx->nvars()), c});
  return r;
}

Polynomial Polynomial::variable(const RingCtxPtr& ctx, int index) {
  Monomial m(ctx->nvars());
  m.set_exponent(index, 1);
  return from_term(ctx, m, ctx->field().one());
}

Polynomial Polynomial::from_term(RingCtxPtr ctx, Monomial m, FieldScalar c) {
  Polynomial r(std::move(ctx));
  if (!c.is_zero()) r.terms_.push_back({std::move(m), c});
  return r;
}

// Merge of two descending term lists.
Polynomial Polynomial::plus(const Polynomial& o) const {
  require_same_ring(*this, o);
  const MonomialOrder& ord = ctx_->order();
  const PrimeField& f = ctx_->field();
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = compare(ord, terms_[i].monomial, o.terms_[j].monomial);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      const FieldScalar s = f.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!s.is_zero()) r.terms_.push_back({terms_[i].monomial, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::negated() const {
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  const PrimeField& f = ctx_->field();
  for (const Term& t : terms_) r.terms_.push_back({t.monomial, f.neg(t.coeff)});
  return r;
}

Polynomial Polynomial::minus(const Polynomial& o) const { return plus(o.negated()); }

Polynomial Polynomial::times_term(const Monomial& m, FieldScalar c) const {
  Polynomial r(ctx_);
  if (c.is_zero()) return r;
  const PrimeField& f = ctx_->field();
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    r.terms_.push_back({t.monomial.times(m), f.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::times(const Polynomial& o) const {
  require_same_ring(*this, o);
  const PrimeField& f = ctx_->field();
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_)
      prods.push_back({a.monomial.times(b.monomial), f.mul(a.coeff, b.coeff)});
  return Polynomial(ctx_, std::move(prods));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  const PrimeField& f = ctx_->field();
  const FieldScalar lead = terms_.front().coeff;
  if (lead == f.one()) return *this;
  const FieldScalar s = f.inv(lead);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.monomial, f.mul(t.coeff, s)});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = constant(ctx_, ctx_->field().one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc.times(base);
    base = base.times(base);
    e >>= 1u;
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ctx() != b.ctx() || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff ||
        a.terms_[i].monomial != b.terms_[i].monomial)
      return false;
  }
  return true;
}

} // namespace hilb
