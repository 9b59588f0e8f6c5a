#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hilb/field.hpp"
#include "hilb/monomial.hpp"

namespace hilb {

/// Shared per-ring context: variable names, coefficient field, term order.
/// Immutable after construction; polynomials hold it by shared_ptr.
class RingCtx {
public:
  RingCtx(std::vector<std::string> variables, std::uint32_t characteristic,
          MonomialOrder order = MonomialOrder::degrevlex())
      : variables_(std::move(variables)), field_(characteristic), order_(order) {
    if (static_cast<int>(variables_.size()) > Monomial::max_vars)
      throw DomainError("at most " + std::to_string(Monomial::max_vars) +
                        " variables are supported");
    for (std::size_t i = 0; i < variables_.size(); ++i)
      for (std::size_t j = i + 1; j < variables_.size(); ++j)
        if (variables_[i] == variables_[j])
          throw DomainError("duplicate variable '" + variables_[i] + "'");
  }

  int nvars() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const { return variables_; }
  const PrimeField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  int variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (variables_[i] == name) return static_cast<int>(i);
    return -1;
  }

private:
  std::vector<std::string> variables_;
  PrimeField field_;
  MonomialOrder order_;
};

using RingCtxPtr = std::shared_ptr<const RingCtx>;

struct Term {
  Monomial monomial;
  FieldScalar coeff;
};

/// Sparse polynomial over F_p: terms sorted descending in the ring order,
/// no zero coefficients stored. All arithmetic is exact.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingCtxPtr ctx) : ctx_(std::move(ctx)) {}

  /// Canonicalizes an arbitrary term list: sorts, merges, drops zeros.
  Polynomial(RingCtxPtr ctx, std::vector<Term> terms);

  static Polynomial zero(RingCtxPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(RingCtxPtr ctx, FieldScalar c);
  static Polynomial variable(const RingCtxPtr& ctx, int index);
  static Polynomial from_term(RingCtxPtr ctx, Monomial m, FieldScalar c);

  const RingCtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }

  /// Everything below the leading term.
  Polynomial tail() const {
    Polynomial r(ctx_);
    if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  unsigned degree() const { return terms_.empty() ? 0 : max_degree(); }

  Polynomial plus(const Polynomial& o) const;
  Polynomial minus(const Polynomial& o) const;
  Polynomial negated() const;
  Polynomial times(const Polynomial& o) const;
  /// this * c * m
  Polynomial times_term(const Monomial& m, FieldScalar c) const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  unsigned max_degree() const {
    unsigned d = 0;
    for (const Term& t : terms_)
      if (t.monomial.degree() > d) d = t.monomial.degree();
    return d;
  }

  RingCtxPtr ctx_;
  std::vector<Term> terms_;
};

/// Throws DomainError unless both polynomials belong to the same ring.
void require_same_ring(const Polynomial& a, const Polynomial& b);

} // namespace hilb
