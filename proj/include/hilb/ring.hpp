#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hilb/groebner.hpp"
#include "hilb/polynomial.hpp"

namespace hilb {

/// A finitely presented quotient R = k[x_1..x_v]/J. Relations are fixed at
/// construction; the reduced Groebner basis of J, the Krull dimension and
/// ℓ(H⁰_m(R)) are computed lazily, write-once under a mutex, then shared.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
public:
  static std::shared_ptr<const QuotientRing> create(RingCtxPtr ctx,
                                                    std::vector<Polynomial> relations,
                                                    GroebnerOptions opts = {});

  const RingCtxPtr& ctx() const { return ctx_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerOptions& options() const { return opts_; }

  const std::vector<Polynomial>& relation_groebner() const;

  /// Krull dimension d of R.
  int dimension() const;

  /// ℓ(H⁰_m(R)) = #(std(J) \ std(J : m^∞)), the m-torsion of R.
  long long h0_length() const;

private:
  QuotientRing(RingCtxPtr ctx, std::vector<Polynomial> relations, GroebnerOptions opts)
      : ctx_(std::move(ctx)), relations_(std::move(relations)), opts_(opts) {}

  RingCtxPtr ctx_;
  std::vector<Polynomial> relations_;
  GroebnerOptions opts_;

  mutable std::mutex mu_;
  mutable std::optional<std::vector<Polynomial>> gb_;
  mutable std::optional<int> dim_;
  mutable std::optional<long long> h0_;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

/// An ideal of a quotient ring, carried by its generator list. The cached
/// reduced Groebner basis is always of (generators + J) in the ambient ring,
/// so lengths and dimensions of R/I read off the leading-term staircase.
/// Handles are cheap to copy; caches are shared and write-once.
class IdealHandle {
public:
  IdealHandle() = default;
  IdealHandle(QuotientRingPtr ring, std::vector<Polynomial> gens);

  const QuotientRingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  const std::vector<Polynomial>& groebner() const;
  std::vector<Monomial> leading_monomials() const;

  /// ℓ(R/I); nullopt when infinite.
  std::optional<long long> quotient_length() const;
  int quotient_dimension() const;

  bool is_m_primary() const;
  /// m-primary with exactly dim R generators.
  bool is_parameter() const;
  /// 1 ∉ I.
  bool is_proper() const;

  bool contains(const Polynomial& f) const;
  Polynomial reduce(const Polynomial& f) const;

private:
  struct Cache {
    std::mutex mu;
    std::optional<std::vector<Polynomial>> gb;
    std::optional<int> dim;
  };

  QuotientRingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
/// Iterated product, interreduced through the reduced basis after each step.
IdealHandle ideal_power(const IdealHandle& a, unsigned k);
IdealHandle ideal_colon(const IdealHandle& a, const Polynomial& f);
/// (I : f^∞), by iterating the colon until the reduced basis stabilizes.
IdealHandle ideal_saturation(const IdealHandle& a, const Polynomial& f);

bool ideal_equal(const IdealHandle& a, const IdealHandle& b);

/// The irrelevant ideal (x_1, ..., x_v).
IdealHandle maximal_ideal(const QuotientRingPtr& ring);
/// The unit ideal (1).
IdealHandle unit_ideal(const QuotientRingPtr& ring);
/// The zero ideal; its effective ambient ideal is J itself.
IdealHandle zero_ideal(const QuotientRingPtr& ring);

} // namespace hilb
