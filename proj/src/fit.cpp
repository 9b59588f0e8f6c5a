#include "hilb/fit.hpp"

#include <algorithm>
#include <string>

namespace hilb {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<__int128>(1) << 62)
      throw InternalError("binomial overflow");
  }
  return static_cast<long long>(acc);
}

long long CoefficientVector::eval(long long n) const {
  long long acc = 0;
  for (int i = 0; i <= degree; ++i) {
    const long long b = binomial(n + degree - i - 1 + shift, degree - i);
    acc += (i % 2 == 0 ? 1 : -1) * values[static_cast<std::size_t>(i)] * b;
  }
  return acc;
}

namespace {

// Coefficients from the exact window [n0, n0+degree]: the degree-th forward
// difference isolates c_0; subtract its basis column, negate, recurse.
std::vector<long long> solve_window(std::vector<long long> w, int n0, int degree,
                                    int shift) {
  std::vector<long long> coeffs(static_cast<std::size_t>(degree) + 1);
  for (int j = 0; j <= degree; ++j) {
    const int deg_j = degree - j;
    std::vector<long long> diff(w.begin(), w.end());
    for (int k = 0; k < deg_j; ++k)
      for (std::size_t t = 0; t + 1 < diff.size(); ++t) diff[t] = diff[t + 1] - diff[t];
    coeffs[static_cast<std::size_t>(j)] = diff[0];
    std::vector<long long> next(w.size() - (j == degree ? 0 : 1));
    for (std::size_t t = 0; t < next.size(); ++t) {
      const long long b =
          binomial(n0 + static_cast<long long>(t) + deg_j - 1 + shift, deg_j);
      next[t] = -(w[t] - coeffs[static_cast<std::size_t>(j)] * b);
    }
    w = std::move(next);
  }
  return coeffs;
}

} // namespace

CoefficientVector fit_binomial_series(SeriesCache& h, int degree, int shift,
                                      CoefficientVector::Kind kind,
                                      const FitOptions& opts) {
  if (degree < 0) throw DomainError("negative fit degree");
  const int extra = degree + 3;
  for (int n0 = 1; n0 + 2 * degree + 3 <= opts.n_max; ++n0) {
    std::vector<long long> window;
    window.reserve(static_cast<std::size_t>(degree) + 1);
    for (int t = 0; t <= degree; ++t) window.push_back(h.at(n0 + t));

    CoefficientVector cv;
    cv.kind = kind;
    cv.degree = degree;
    cv.shift = shift;
    cv.values = solve_window(std::move(window), n0, degree, shift);
    cv.postulation = n0;
    cv.window_end = n0 + degree + extra;

    bool ok = true;
    for (int n = n0 + degree + 1; n <= cv.window_end; ++n) {
      if (cv.eval(n) != h.at(n)) {
        ok = false;
        break;
      }
    }
    if (ok) return cv;
  }
  throw PostulationError("postulation not reached below n_max = " +
                         std::to_string(opts.n_max));
}

} // namespace hilb
