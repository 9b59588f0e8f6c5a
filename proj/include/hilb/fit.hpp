#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hilb/errors.hpp"

namespace hilb {

/// binom(n, k) with the combinatorial convention: zero when k < 0, n < 0 or
/// k > n. Exact in long long for the desk-scale arguments used here.
long long binomial(long long n, long long k);

struct FitOptions {
  /// Hard cap on the argument while searching for polynomial agreement.
  int n_max = 40;
};

/// Integer series n -> h(n), computed on demand and memoized.
class SeriesCache {
public:
  explicit SeriesCache(std::function<long long(int)> f) : f_(std::move(f)) {}

  long long at(int n) {
    if (n < 0) throw DomainError("series argument must be nonnegative");
    if (static_cast<std::size_t>(n) >= memo_.size())
      memo_.resize(static_cast<std::size_t>(n) + 1);
    auto& slot = memo_[static_cast<std::size_t>(n)];
    if (!slot) slot = f_(n);
    return *slot;
  }

private:
  std::function<long long(int)> f_;
  std::vector<std::optional<long long>> memo_;
};

/// Extracted coefficients c_0..c_degree of a series that eventually agrees
/// with  sum_i (-1)^i c_i binom(n + degree - i - 1 + shift, degree - i).
/// shift = 0 gives the Hilbert-Samuel and K-relative bases; shift = 1 the
/// fiber basis (total polynomial degree is then `degree` less one).
struct CoefficientVector {
  enum class Kind { samuel, relative, fiber };

  Kind kind = Kind::samuel;
  std::vector<long long> values;
  int degree = 0;
  int shift = 0;
  /// Least n from which agreement with the polynomial was verified.
  int postulation = 0;
  /// Last verified argument; [postulation, window_end] all agree exactly.
  int window_end = 0;

  long long eval(long long n) const;
  long long leading() const { return values.empty() ? 0 : values.front(); }
};

/// Solves for the coefficients on the window [n0, n0+degree] by exact integer
/// forward differences, then accepts only when the fit also reproduces the
/// next degree+3 values. Throws PostulationError when no window below
/// opts.n_max validates.
CoefficientVector fit_binomial_series(SeriesCache& h, int degree, int shift,
                                      CoefficientVector::Kind kind,
                                      const FitOptions& opts);

} // namespace hilb
