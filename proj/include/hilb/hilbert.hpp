#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilb/fit.hpp"
#include "hilb/ring.hpp"

namespace hilb {

/// The module argument of the Hilbert-Samuel machinery: R itself, a cyclic
/// quotient R/A, or an m-primary ideal viewed as a module. Lengths reduce to
/// ideal lengths: l((R/A)/Q^n(R/A)) = l(R/(Q^n+A)),
/// l(K/Q^nK) = l(R/Q^nK) - l(R/K).
struct ModuleSpec {
  enum class Kind { ring, quotient, ideal_module };

  Kind kind = Kind::ring;
  std::optional<IdealHandle> ideal;

  static ModuleSpec ring() { return {Kind::ring, std::nullopt}; }
  static ModuleSpec quotient(IdealHandle a) { return {Kind::quotient, std::move(a)}; }
  static ModuleSpec ideal_module(IdealHandle k) {
    return {Kind::ideal_module, std::move(k)};
  }

  int dimension(const QuotientRing& r) const;
  std::string describe() const;
};

/// Shares the interreduced powers of Q across the series evaluated for one
/// sweep (Hilbert-Samuel, K-relative and fiber values all consume Q^n).
class HilbertSweep {
public:
  explicit HilbertSweep(IdealHandle q);

  const IdealHandle& q() const { return q_; }

  /// H(Q,n,M) = l(M/Q^nM); H(Q,0,M) = 0.
  long long samuel(const ModuleSpec& m, int n);
  /// H_K(Q,n) = l(R/KQ^n); at n = 0 this is l(R/K).
  long long relative(const IdealHandle& k, int n);
  /// l(Q^n/KQ^n) = relative - samuel; at n = 0 equals l(R/K).
  long long fiber(const IdealHandle& k, int n);

  const IdealHandle& q_power(int n);

private:
  IdealHandle q_;
  std::vector<IdealHandle> powers_;
};

long long hilbert_samuel_length(const IdealHandle& q, const ModuleSpec& m, int n);
long long relative_hilbert_length(const IdealHandle& k, const IdealHandle& q, int n);
long long fiber_length(const IdealHandle& k, const IdealHandle& q, int n);

/// Coefficients e_i(Q,M) of degree r = dim M. Requires Q m-primary.
CoefficientVector samuel_coeffs(const IdealHandle& q, const ModuleSpec& m,
                                const FitOptions& opts = {});
/// Coefficients g_i^K(Q) of degree d. Requires K, Q m-primary, K proper.
CoefficientVector relative_coeffs(const IdealHandle& k, const IdealHandle& q,
                                  const FitOptions& opts = {});
/// Fiber coefficients f_i^K(Q), polynomial degree d-1.
CoefficientVector fiber_coeffs(const IdealHandle& k, const IdealHandle& q,
                               const FitOptions& opts = {});

struct IdentityLine {
  std::string name;
  long long lhs = 0, rhs = 0;
  bool ok = false;
};

/// The provable relations between the three coefficient families:
///   g_0 = e_0(Q,R) = e_0(Q,K);
///   g_i = e_i(Q,K) for 1 <= i <= d-1;
///   g_d = e_d(Q,K) + (-1)^d l(R/K);
///   f_i = e_{i+1}(Q,R) - g_{i+1} + e_i(Q,R) - g_i for 0 <= i <= d-1;
/// plus pointwise additivity of the three length functions on the verified
/// window. Any failed line signals an engine defect, not bad input.
struct IdentityReport {
  CoefficientVector e_ring;
  CoefficientVector e_ideal_module;
  CoefficientVector g;
  CoefficientVector f;
  long long len_r_mod_k = 0;
  std::vector<IdentityLine> lines;
  bool all_ok = false;
};

IdentityReport verify_coefficient_identities(const IdealHandle& k, const IdealHandle& q,
                                             const FitOptions& opts = {});

/// I(Q;M) = l(M/QM) - e_0(Q,M); always >= 0 for parameter ideals.
long long i_invariant(const IdealHandle& q, const ModuleSpec& m,
                      const FitOptions& opts = {});

enum class PredictionTarget { samuel, relative };

/// Closed formula for the coefficients of a standard parameter ideal, from
/// user-supplied local cohomology lengths lh[0..r-1]:
///   i in [1, r-1]: (-1)^i sum_{j=1}^{r-i} binom(r-i-1, j-1) lh[j]
///   i = r:         (-1)^r lh[0]   (+ (-1)^r l(R/K) for the relative family)
long long standard_coefficient(PredictionTarget target, int i, int r,
                               std::span<const long long> lh,
                               long long len_r_mod_k = 0);

} // namespace hilb
