#include "hilb/hilbert.hpp"

#include <algorithm>

#include "hilb/parse.hpp"

namespace hilb {

// --- module plumbing ---------------------------------------------------------

int ModuleSpec::dimension(const QuotientRing& r) const {
  switch (kind) {
    case Kind::ring:
      return r.dimension();
    case Kind::quotient:
      return std::max(ideal->quotient_dimension(), 0);
    case Kind::ideal_module:
      // An m-primary ideal is a full-dimensional submodule of R.
      return r.dimension();
  }
  throw InternalError("unknown module kind");
}

std::string ModuleSpec::describe() const {
  switch (kind) {
    case Kind::ring:
      return "R";
    case Kind::quotient: {
      std::string s = "R/(";
      for (std::size_t i = 0; i < ideal->gens().size(); ++i) {
        if (i > 0) s += ", ";
        s += print_polynomial(ideal->gens()[i]);
      }
      return s + ")";
    }
    case Kind::ideal_module: {
      std::string s = "(";
      for (std::size_t i = 0; i < ideal->gens().size(); ++i) {
        if (i > 0) s += ", ";
        s += print_polynomial(ideal->gens()[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

HilbertSweep::HilbertSweep(IdealHandle q) : q_(std::move(q)) {
  if (!q_.is_m_primary())
    throw DomainError("Q must be m-primary for Hilbert evaluations");
}

const IdealHandle& HilbertSweep::q_power(int n) {
  if (n < 0) throw DomainError("negative power");
  if (powers_.empty()) {
    powers_.push_back(unit_ideal(q_.ring()));
    powers_.push_back(q_);
  }
  while (static_cast<int>(powers_.size()) <= n) {
    IdealHandle next = ideal_product(powers_.back(), q_);
    powers_.push_back(IdealHandle(q_.ring(), next.groebner()));
  }
  return powers_[static_cast<std::size_t>(n)];
}

namespace {

long long finite_length(const IdealHandle& a, const char* what) {
  const std::optional<long long> len = a.quotient_length();
  if (!len) throw DomainError(std::string(what) + " has infinite length");
  return *len;
}

} // namespace

long long HilbertSweep::samuel(const ModuleSpec& m, int n) {
  if (n < 0) throw DomainError("negative Hilbert argument");
  if (n == 0) return 0;
  switch (m.kind) {
    case ModuleSpec::Kind::ring:
      return finite_length(q_power(n), "R/Q^n");
    case ModuleSpec::Kind::quotient:
      if (!m.ideal->is_proper()) throw DomainError("R/A is the zero module");
      return finite_length(ideal_sum(q_power(n), *m.ideal), "M/Q^nM");
    case ModuleSpec::Kind::ideal_module: {
      // l(K/Q^nK) = l(R/Q^nK) - l(R/K).
      if (!m.ideal->is_m_primary() || !m.ideal->is_proper())
        throw DomainError("ideal module must be m-primary and proper");
      const long long whole =
          finite_length(ideal_product(q_power(n), *m.ideal), "R/Q^nK");
      return whole - finite_length(*m.ideal, "R/K");
    }
  }
  throw InternalError("unknown module kind");
}

long long HilbertSweep::relative(const IdealHandle& k, int n) {
  if (n < 0) throw DomainError("negative Hilbert argument");
  if (!k.is_m_primary() || !k.is_proper())
    throw DomainError("K must be a proper m-primary ideal");
  if (n == 0) return finite_length(k, "R/K");
  return finite_length(ideal_product(k, q_power(n)), "R/KQ^n");
}

long long HilbertSweep::fiber(const IdealHandle& k, int n) {
  if (n == 0) return finite_length(k, "R/K");
  return relative(k, n) - samuel(ModuleSpec::ring(), n);
}

long long hilbert_samuel_length(const IdealHandle& q, const ModuleSpec& m, int n) {
  HilbertSweep sweep(q);
  return sweep.samuel(m, n);
}

long long relative_hilbert_length(const IdealHandle& k, const IdealHandle& q, int n) {
  HilbertSweep sweep(q);
  return sweep.relative(k, n);
}

long long fiber_length(const IdealHandle& k, const IdealHandle& q, int n) {
  HilbertSweep sweep(q);
  return sweep.fiber(k, n);
}

// --- coefficient extraction ----------------------------------------------------

namespace {

CoefficientVector checked_positive_lead(CoefficientVector cv, const char* what) {
  if (cv.leading() <= 0)
    throw InternalError(std::string("nonpositive leading coefficient in ") + what);
  return cv;
}

CoefficientVector samuel_from_sweep(HilbertSweep& sweep, const ModuleSpec& m,
                                    const FitOptions& opts) {
  const int r = m.dimension(*sweep.q().ring());
  SeriesCache series([&](int n) { return sweep.samuel(m, n); });
  return checked_positive_lead(
      fit_binomial_series(series, r, 0, CoefficientVector::Kind::samuel, opts),
      "e(Q,M)");
}

CoefficientVector relative_from_sweep(HilbertSweep& sweep, const IdealHandle& k,
                                      const FitOptions& opts) {
  const int d = sweep.q().ring()->dimension();
  SeriesCache series([&](int n) { return sweep.relative(k, n); });
  return checked_positive_lead(
      fit_binomial_series(series, d, 0, CoefficientVector::Kind::relative, opts),
      "g^K(Q)");
}

CoefficientVector fiber_from_sweep(HilbertSweep& sweep, const IdealHandle& k,
                                   const FitOptions& opts) {
  const int d = sweep.q().ring()->dimension();
  if (d == 0) throw DomainError("fiber coefficients need dim R >= 1");
  SeriesCache series([&](int n) { return sweep.fiber(k, n); });
  return checked_positive_lead(
      fit_binomial_series(series, d - 1, 1, CoefficientVector::Kind::fiber, opts),
      "f^K(Q)");
}

} // namespace

CoefficientVector samuel_coeffs(const IdealHandle& q, const ModuleSpec& m,
                                const FitOptions& opts) {
  HilbertSweep sweep(q);
  return samuel_from_sweep(sweep, m, opts);
}

CoefficientVector relative_coeffs(const IdealHandle& k, const IdealHandle& q,
                                  const FitOptions& opts) {
  HilbertSweep sweep(q);
  return relative_from_sweep(sweep, k, opts);
}

CoefficientVector fiber_coeffs(const IdealHandle& k, const IdealHandle& q,
                               const FitOptions& opts) {
  HilbertSweep sweep(q);
  return fiber_from_sweep(sweep, k, opts);
}

IdentityReport verify_coefficient_identities(const IdealHandle& k, const IdealHandle& q,
                                             const FitOptions& opts) {
  if (!q.is_parameter()) throw DomainError("Q must be a parameter ideal");
  if (!k.is_m_primary() || !k.is_proper())
    throw DomainError("K must be a proper m-primary ideal");
  const int d = q.ring()->dimension();

  HilbertSweep sweep(q);
  IdentityReport rep;
  rep.e_ring = samuel_from_sweep(sweep, ModuleSpec::ring(), opts);
  rep.e_ideal_module = samuel_from_sweep(sweep, ModuleSpec::ideal_module(k), opts);
  rep.g = relative_from_sweep(sweep, k, opts);
  rep.f = fiber_from_sweep(sweep, k, opts);
  rep.len_r_mod_k = *k.quotient_length();

  auto line = [&](std::string name, long long lhs, long long rhs) {
    rep.lines.push_back({std::move(name), lhs, rhs, lhs == rhs});
  };

  line("g_0 = e_0(Q,R)", rep.g.values[0], rep.e_ring.values[0]);
  line("g_0 = e_0(Q,K)", rep.g.values[0], rep.e_ideal_module.values[0]);
  for (int i = 1; i <= d - 1; ++i) {
    line("g_" + std::to_string(i) + " = e_" + std::to_string(i) + "(Q,K)",
         rep.g.values[static_cast<std::size_t>(i)],
         rep.e_ideal_module.values[static_cast<std::size_t>(i)]);
  }
  if (d >= 1) {
    const long long sign = d % 2 == 0 ? 1 : -1;
    line("g_" + std::to_string(d) + " = e_" + std::to_string(d) +
             "(Q,K) + (-1)^d l(R/K)",
         rep.g.values[static_cast<std::size_t>(d)],
         rep.e_ideal_module.values[static_cast<std::size_t>(d)] + sign * rep.len_r_mod_k);
  }
  for (int i = 0; i <= d - 1; ++i) {
    const long long rhs = rep.e_ring.values[static_cast<std::size_t>(i + 1)] -
                          rep.g.values[static_cast<std::size_t>(i + 1)] +
                          rep.e_ring.values[static_cast<std::size_t>(i)] -
                          rep.g.values[static_cast<std::size_t>(i)];
    line("f_" + std::to_string(i) + " = e_" + std::to_string(i + 1) + "(Q,R) - g_" +
             std::to_string(i + 1) + " + e_" + std::to_string(i) + "(Q,R) - g_" +
             std::to_string(i),
         rep.f.values[static_cast<std::size_t>(i)], rhs);
  }

  // Pointwise additivity l(R/KQ^n) = l(R/Q^n) + l(Q^n/KQ^n) on a shared window.
  const int lo = std::max(rep.e_ring.postulation, rep.g.postulation);
  const int hi = std::min(rep.e_ring.window_end, rep.g.window_end);
  bool additive = true;
  for (int n = lo; n <= hi; ++n)
    additive = additive &&
               sweep.relative(k, n) == sweep.samuel(ModuleSpec::ring(), n) + sweep.fiber(k, n);
  line("H_K = H + H_F on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
       additive ? 1 : 0, 1);

  rep.all_ok = std::all_of(rep.lines.begin(), rep.lines.end(),
                           [](const IdentityLine& l) { return l.ok; });
  return rep;
}

long long i_invariant(const IdealHandle& q, const ModuleSpec& m, const FitOptions& opts) {
  if (!q.is_parameter())
    throw DomainError("I(Q;M) requires a parameter ideal");
  HilbertSweep sweep(q);
  const CoefficientVector e = samuel_from_sweep(sweep, m, opts);
  const long long covolume = sweep.samuel(m, 1);
  const long long value = covolume - e.values[0];
  if (value < 0)
    throw InternalError("negative I(Q;M): engine defect");
  return value;
}

long long standard_coefficient(PredictionTarget target, int i, int r,
                               std::span<const long long> lh, long long len_r_mod_k) {
  if (i < 1 || i > r) throw DomainError("coefficient index out of range");
  if (static_cast<int>(lh.size()) < r)
    throw DomainError("need cohomology lengths lh[0..r-1]");
  for (const long long v : lh)
    if (v < 0) throw DomainError("negative cohomology length");
  const long long sign = i % 2 == 0 ? 1 : -1;
  if (i == r) {
    const long long base = lh[0];
    if (target == PredictionTarget::relative) return sign * (base + len_r_mod_k);
    return sign * base;
  }
  long long acc = 0;
  for (int j = 1; j <= r - i; ++j) acc += binomial(r - i - 1, j - 1) * lh[static_cast<std::size_t>(j)];
  return sign * acc;
}

} // namespace hilb
