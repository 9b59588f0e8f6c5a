#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hilb/polynomial.hpp"

namespace hilb {

struct GroebnerOptions {
  /// Cap on processed S-pairs before a BudgetError is raised.
  std::uint64_t spair_budget = 200'000;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Complete multivariate division remainder: no term of the result is
/// divisible by any leading monomial of the basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// Buchberger with the coprime-lcm and chain criteria, normal selection
/// strategy (minimal lcm degree first). Returns the reduced basis: monic,
/// pairwise irreducible, sorted by leading monomial ascending.
std::vector<Polynomial> reduced_groebner(std::vector<Polynomial> gens,
                                         const GroebnerOptions& opts = {});

/// Post-check oracle: every S-polynomial of the set reduces to zero.
bool passes_buchberger_criterion(std::span<const Polynomial> basis);

/// Exact quotient g / f; throws InternalError if f does not divide g.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f);

// --- monomial staircase combinatorics -------------------------------------

/// Drops generators divisible by another generator.
std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens);

/// Number of monomials outside the ideal generated by `lts`, or nullopt when
/// the staircase is unbounded. An ideal containing 1 counts zero monomials.
std::optional<long long> standard_monomial_count(std::vector<Monomial> lts, int nvars);

/// All standard monomials; throws DomainError when there are infinitely many.
std::vector<Monomial> enumerate_standard_monomials(std::vector<Monomial> lts, int nvars);

/// Krull dimension of the quotient by the monomial ideal: size of the largest
/// variable subset meeting no generator's support. Returns -1 for the unit
/// ideal (empty scheme).
int monomial_ideal_dimension(const std::vector<Monomial>& lts, int nvars);

// --- ambient ideal algebra (used by the quotient-ring layer) ---------------

/// Generators of A ∩ B, computed by eliminating an auxiliary variable t from
/// t·A + (1−t)·B under an elimination order.
std::vector<Polynomial> ambient_intersection(const std::vector<Polynomial>& a,
                                             const std::vector<Polynomial>& b,
                                             const GroebnerOptions& opts);

/// Generators of (A : f), via the intersection–elimination method.
std::vector<Polynomial> ambient_colon(const std::vector<Polynomial>& a,
                                      const Polynomial& f,
                                      const GroebnerOptions& opts);

} // namespace hilb
