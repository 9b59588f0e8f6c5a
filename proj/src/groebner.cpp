#include "hilb/groebner.hpp"

#include <algorithm>

namespace hilb {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero())
    throw DomainError("S-polynomial of zero polynomial");
  const PrimeField& field = f.ctx()->field();
  const Monomial l = f.leading_monomial().lcm_with(g.leading_monomial());
  const Polynomial lhs =
      f.times_term(l.divided_by(f.leading_monomial()), field.inv(f.leading_term().coeff));
  const Polynomial rhs =
      g.times_term(l.divided_by(g.leading_monomial()), field.inv(g.leading_term().coeff));
  return lhs.minus(rhs);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const Polynomial& g : basis) require_same_ring(f, g);
  const PrimeField& field = f.ctx()->field();
  Polynomial h = f;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term lt = h.leading_term();
    const Polynomial* reducer = nullptr;
    for (const Polynomial& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.monomial)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(lt);
      h = h.tail();
      continue;
    }
    const FieldScalar c = field.div(lt.coeff, reducer->leading_term().coeff);
    const Monomial m = lt.monomial.divided_by(reducer->leading_monomial());
    h = h.minus(reducer->times_term(m, c));
  }
  return Polynomial(f.ctx(), std::move(remainder));
}

namespace {

struct SPair {
  std::size_t i, j;
  Monomial lcm;
};

// Normal strategy with deterministic tie-breaks.
bool pair_before(const MonomialOrder& ord, const SPair& a, const SPair& b) {
  if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
  if (const int c = compare(ord, a.lcm, b.lcm); c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

// Gebauer-Moeller style update: add h to the basis, prune the pair queue.
void update_pairs(std::vector<Polynomial>& basis, std::vector<SPair>& pairs,
                  Polynomial h) {
  const std::size_t idx = basis.size();
  const Monomial& lm = h.leading_monomial();
  const MonomialOrder& ord = h.ctx()->order();

  std::vector<SPair> fresh;
  fresh.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    fresh.push_back({k, idx, basis[k].leading_monomial().lcm_with(lm)});

  // Chain criterion: an old pair whose lcm is a proper multiple of lm is
  // covered by the two new pairs through h.
  std::erase_if(pairs, [&](const SPair& p) {
    if (!lm.divides(p.lcm)) return false;
    const Monomial li = basis[p.i].leading_monomial().lcm_with(lm);
    const Monomial lj = basis[p.j].leading_monomial().lcm_with(lm);
    return li != p.lcm && lj != p.lcm;
  });

  // Among the new pairs keep one representative per minimal lcm.
  std::sort(fresh.begin(), fresh.end(),
            [&](const SPair& a, const SPair& b) { return pair_before(ord, a, b); });
  std::vector<SPair> minimal;
  for (SPair& p : fresh) {
    bool covered = false;
    for (const SPair& q : minimal) {
      if (q.lcm.divides(p.lcm)) {
        covered = true;
        break;
      }
    }
    if (!covered) minimal.push_back(std::move(p));
  }

  // Coprime-lead (Buchberger's first) criterion.
  std::erase_if(minimal, [&](const SPair& p) {
    return basis[p.i].leading_monomial().coprime_with(lm);
  });

  pairs.insert(pairs.end(), minimal.begin(), minimal.end());
  basis.push_back(std::move(h));
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
  if (basis.empty()) return basis;
  const MonomialOrder& ord = basis.front().ctx()->order();

  // Drop elements whose lead is divisible by another element's lead.
  std::vector<bool> redundant(basis.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || redundant[j]) continue;
      if (!basis[j].leading_monomial().divides(basis[i].leading_monomial())) continue;
      if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
      redundant[i] = true;
      break;
    }
  }
  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!redundant[i]) kept.push_back(std::move(basis[i]));

  // Tail-reduce each element against the rest; leads are untouched.
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    kept[i] = normal_form(kept[i], others).monic();
  }

  std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(ord, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return kept;
}

} // namespace

std::vector<Polynomial> reduced_groebner(std::vector<Polynomial> gens,
                                         const GroebnerOptions& opts) {
  std::erase_if(gens, [](const Polynomial& f) { return f.is_zero(); });
  if (gens.empty()) return gens;
  const RingCtxPtr ctx = gens.front().ctx();
  const MonomialOrder& ord = ctx->order();
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(ord, a.leading_monomial(), b.leading_monomial()) < 0;
  });

  std::vector<Polynomial> basis;
  std::vector<SPair> pairs;
  for (Polynomial& f : gens) {
    Polynomial h = normal_form(f, basis);
    if (!h.is_zero()) update_pairs(basis, pairs, h.monic());
  }

  std::uint64_t processed = 0;
  while (!pairs.empty()) {
    const auto it = std::min_element(
        pairs.begin(), pairs.end(),
        [&](const SPair& a, const SPair& b) { return pair_before(ord, a, b); });
    const SPair p = *it;
    pairs.erase(it);
    if (++processed > opts.spair_budget)
      throw BudgetError("S-pair budget of " + std::to_string(opts.spair_budget) +
                        " exceeded");
    Polynomial h = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (!h.is_zero()) update_pairs(basis, pairs, h.monic());
  }

  return interreduce(std::move(basis));
}

bool passes_buchberger_criterion(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero())
        return false;
  return true;
}

Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
  require_same_ring(g, f);
  if (f.is_zero()) throw DomainError("division by zero polynomial");
  const PrimeField& field = g.ctx()->field();
  Polynomial h = g;
  std::vector<Term> quotient;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    if (!f.leading_monomial().divides(lt.monomial))
      throw InternalError("exact_divide: dividend not a multiple of divisor");
    const Monomial m = lt.monomial.divided_by(f.leading_monomial());
    const FieldScalar c = field.div(lt.coeff, f.leading_term().coeff);
    quotient.push_back({m, c});
    h = h.minus(f.times_term(m, c));
  }
  return Polynomial(g.ctx(), std::move(quotient));
}

// --- staircase ---------------------------------------------------------------

std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> minimal;
  for (const Monomial& m : gens) {
    bool covered = false;
    for (const Monomial& g : minimal) {
      if (g.divides(m)) {
        covered = true;
        break;
      }
    }
    if (!covered) minimal.push_back(m);
  }
  return minimal;
}

namespace {

// Per-variable box bound from pure-power generators; nullopt when some
// variable has none (unbounded staircase).
std::optional<std::vector<int>> pure_power_bounds(const std::vector<Monomial>& gens,
                                                  int nvars) {
  std::vector<int> bounds(static_cast<std::size_t>(nvars), -1);
  for (const Monomial& g : gens) {
    const std::uint32_t support = g.support_mask();
    if (support == 0 || (support & (support - 1)) != 0) continue; // not a pure power
    for (int v = 0; v < nvars; ++v) {
      if (support == (1u << v)) {
        const int e = g.exponent(v);
        if (bounds[static_cast<std::size_t>(v)] < 0 || e < bounds[static_cast<std::size_t>(v)])
          bounds[static_cast<std::size_t>(v)] = e;
      }
    }
  }
  for (int b : bounds)
    if (b < 0) return std::nullopt;
  return bounds;
}

// Depth-first walk of the staircase box with generator filtering. `emit` is
// called once per standard monomial.
template <typename Emit>
void walk_standard(const std::vector<int>& bounds, Monomial& cur, int level, int nvars,
                   const std::vector<const Monomial*>& active, Emit&& emit) {
  for (int e = 0; e < bounds[static_cast<std::size_t>(level)]; ++e) {
    cur.set_exponent(level, e);
    std::vector<const Monomial*> next;
    next.reserve(active.size());
    bool blocked = false;
    for (const Monomial* g : active) {
      if (g->exponent(level) > e) continue; // cannot divide in this subtree
      bool trailing_zero = true;
      for (int v = level + 1; v < nvars; ++v) {
        if (g->exponent(v) != 0) {
          trailing_zero = false;
          break;
        }
      }
      if (trailing_zero) {
        // g divides every extension of cur; larger e only keeps it dividing.
        blocked = true;
        break;
      }
      next.push_back(g);
    }
    if (blocked) break;
    if (level + 1 == nvars) {
      emit(cur);
    } else {
      walk_standard(bounds, cur, level + 1, nvars, next, emit);
    }
  }
  cur.set_exponent(level, 0);
}

template <typename Emit>
bool visit_standard(std::vector<Monomial> lts, int nvars, Emit&& emit) {
  const std::vector<Monomial> gens = minimal_monomial_generators(std::move(lts));
  for (const Monomial& g : gens)
    if (g.is_one()) return true; // unit ideal, no standard monomials
  if (nvars == 0) {
    Monomial unit(0);
    emit(unit);
    return true;
  }
  const auto bounds = pure_power_bounds(gens, nvars);
  if (!bounds) return false;
  std::vector<const Monomial*> active;
  active.reserve(gens.size());
  for (const Monomial& g : gens) active.push_back(&g);
  Monomial cur(nvars);
  walk_standard(*bounds, cur, 0, nvars, active, emit);
  return true;
}

} // namespace

std::optional<long long> standard_monomial_count(std::vector<Monomial> lts, int nvars) {
  long long count = 0;
  if (!visit_standard(std::move(lts), nvars, [&](const Monomial&) { ++count; }))
    return std::nullopt;
  return count;
}

std::vector<Monomial> enumerate_standard_monomials(std::vector<Monomial> lts, int nvars) {
  std::vector<Monomial> out;
  if (!visit_standard(std::move(lts), nvars, [&](const Monomial& m) { out.push_back(m); }))
    throw DomainError("staircase is unbounded");
  return out;
}

int monomial_ideal_dimension(const std::vector<Monomial>& lts, int nvars) {
  std::vector<std::uint32_t> supports;
  supports.reserve(lts.size());
  for (const Monomial& m : lts) {
    if (m.is_one()) return -1;
    supports.push_back(m.support_mask());
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    bool independent = true;
    for (std::uint32_t s : supports) {
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// --- elimination-based ideal algebra ----------------------------------------

namespace {

RingCtxPtr extended_ctx(const RingCtxPtr& ctx) {
  std::vector<std::string> vars = ctx->variables();
  vars.push_back("@t"); // '@' cannot appear in user identifiers
  return std::make_shared<RingCtx>(std::move(vars), ctx->field().modulus(),
                                   MonomialOrder::elimination(ctx->nvars()));
}

Polynomial lift(const Polynomial& f, const RingCtxPtr& ext) {
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const Term& t : f.terms()) {
    Monomial m(ext->nvars());
    for (int v = 0; v < t.monomial.nvars(); ++v)
      m.set_exponent(v, t.monomial.exponent(v));
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(ext, std::move(terms));
}

std::optional<Polynomial> restrict_from_extension(const Polynomial& f,
                                                  const RingCtxPtr& base) {
  const int aux = base->nvars();
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const Term& t : f.terms()) {
    if (t.monomial.exponent(aux) != 0) return std::nullopt;
    Monomial m(base->nvars());
    for (int v = 0; v < base->nvars(); ++v) m.set_exponent(v, t.monomial.exponent(v));
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(base, std::move(terms));
}

} // namespace

std::vector<Polynomial> ambient_intersection(const std::vector<Polynomial>& a,
                                             const std::vector<Polynomial>& b,
                                             const GroebnerOptions& opts) {
  RingCtxPtr base;
  for (const Polynomial& f : a)
    if (f.ctx()) base = f.ctx();
  for (const Polynomial& f : b)
    if (f.ctx()) base = f.ctx();
  if (!base) return {};

  const RingCtxPtr ext = extended_ctx(base);
  const Polynomial t = Polynomial::variable(ext, base->nvars());
  const Polynomial one_minus_t =
      Polynomial::constant(ext, ext->field().one()).minus(t);

  std::vector<Polynomial> gens;
  gens.reserve(a.size() + b.size());
  for (const Polynomial& f : a) gens.push_back(t.times(lift(f, ext)));
  for (const Polynomial& f : b) gens.push_back(one_minus_t.times(lift(f, ext)));

  std::vector<Polynomial> out;
  for (const Polynomial& g : reduced_groebner(std::move(gens), opts)) {
    if (auto r = restrict_from_extension(g, base)) out.push_back(std::move(*r));
  }
  return out;
}

std::vector<Polynomial> ambient_colon(const std::vector<Polynomial>& a,
                                      const Polynomial& f,
                                      const GroebnerOptions& opts) {
  if (f.is_zero()) throw DomainError("colon by zero polynomial");
  std::vector<Polynomial> out;
  for (const Polynomial& g : ambient_intersection(a, {f}, opts))
    out.push_back(exact_divide(g, f));
  return out;
}

} // namespace hilb
