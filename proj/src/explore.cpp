#include "hilb/explore.hpp"

#include <algorithm>
#include <cstdlib>

#include "hilb/parse.hpp"

namespace hilb {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Small deterministic stream, split per sample index from the master seed.
class Rng {
public:
  Rng(std::uint64_t seed, std::uint64_t stream) : state_(splitmix64(seed ^ splitmix64(stream + 1))) {}

  std::uint64_t next() { return state_ = splitmix64(state_); }

  /// Uniform in [0, n); platform-stable (no std::uniform_int_distribution).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

std::vector<std::string> gen_strings(const IdealHandle& q) {
  std::vector<std::string> out;
  out.reserve(q.gens().size());
  for (const Polynomial& f : q.gens()) out.push_back(print_polynomial(f));
  return out;
}

std::string classify(const std::vector<SampleRecord>& samples) {
  std::vector<long long> vals;
  for (const SampleRecord& s : samples)
    if (s.value) vals.push_back(*s.value);
  if (vals.empty()) return "bounded-in-window";
  if (std::all_of(vals.begin(), vals.end(), [&](long long v) { return v == vals[0]; }))
    return "constant";
  bool growing = vals.size() >= 2;
  for (std::size_t t = 1; t < vals.size() && growing; ++t)
    growing = std::llabs(vals[t]) > std::llabs(vals[t - 1]);
  return growing ? "growing-in-window" : "bounded-in-window";
}

void finalize(ExplorationReport& rep) {
  for (const SampleRecord& s : rep.samples)
    if (s.value) rep.observed.push_back(*s.value);
  std::sort(rep.observed.begin(), rep.observed.end());
  rep.observed.erase(std::unique(rep.observed.begin(), rep.observed.end()),
                     rep.observed.end());
  rep.classification = classify(rep.samples);
}

} // namespace

std::vector<IdealHandle> sample_parameter_ideals(const QuotientRingPtr& ring,
                                                 const SamplerConfig& cfg,
                                                 const IdealHandle* k) {
  const int d = ring->dimension();
  if (d < 1) throw DomainError("no parameter ideals to sample in dimension 0");
  if (cfg.require_subset_of_k && k == nullptr)
    throw DomainError("delta sampling needs the ideal K");
  const RingCtxPtr& ctx = ring->ctx();
  const int nv = ctx->nvars();
  const int pool = static_cast<int>(cfg.coefficient_pool.size());
  if (pool == 0) throw DomainError("empty coefficient pool");

  std::vector<IdealHandle> out;
  out.reserve(static_cast<std::size_t>(cfg.sample_count));
  for (int idx = 0; idx < cfg.sample_count; ++idx) {
    Rng rng(cfg.seed, static_cast<std::uint64_t>(idx));
    bool accepted = false;
    for (int attempt = 0; attempt < cfg.max_retries && !accepted; ++attempt) {
      std::vector<Polynomial> gens;
      gens.reserve(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) {
        Polynomial lin = Polynomial::zero(ctx);
        while (lin.is_zero()) {
          std::vector<Term> terms;
          for (int v = 0; v < nv; ++v) {
            // One extra slot in the draw leaves the variable out.
            const std::uint64_t c = rng.below(static_cast<std::uint64_t>(pool) + 1);
            if (c == static_cast<std::uint64_t>(pool)) continue;
            Monomial mono(nv);
            mono.set_exponent(v, 1);
            terms.push_back({mono, ctx->field().from_int(
                                       cfg.coefficient_pool[static_cast<std::size_t>(c)])});
          }
          lin = Polynomial(ctx, std::move(terms));
        }
        const int span = cfg.power_max - cfg.power_min + 1;
        const int a = cfg.power_min +
                      (span > 1 ? static_cast<int>(rng.below(static_cast<std::uint64_t>(span))) : 0);
        gens.push_back(lin.pow(static_cast<unsigned>(a)));
      }
      IdealHandle q(ring, std::move(gens));
      if (q.quotient_dimension() != 0) continue;
      if (static_cast<int>(q.gens().size()) != d) continue;
      if (cfg.require_subset_of_k) {
        bool inside = true;
        for (const Polynomial& g : q.gens()) inside = inside && k->contains(g);
        if (!inside) continue;
      }
      out.push_back(std::move(q));
      accepted = true;
    }
    if (!accepted)
      throw BudgetError("sampler retry budget exhausted at sample " + std::to_string(idx));
  }
  return out;
}

ExplorationReport explore_relative_set(const IdealHandle& k, int i,
                                       std::span<const IdealHandle> qs,
                                       std::uint64_t seed, const FitOptions& opts) {
  const int d = k.ring()->dimension();
  if (i < 1 || i > d) throw DomainError("index i must be in [1, d]");
  ExplorationReport rep;
  rep.target = "g_" + std::to_string(i) + "^K";
  rep.seed = seed;
  for (const IdealHandle& q : qs) {
    SampleRecord rec;
    rec.q_generators = gen_strings(q);
    try {
      const CoefficientVector g = relative_coeffs(k, q, opts);
      rec.value = g.values[static_cast<std::size_t>(i)];
    } catch (const PostulationError& e) {
      rec.note = e.what();
    }
    rep.samples.push_back(std::move(rec));
  }
  finalize(rep);
  return rep;
}

ExplorationReport explore_samuel_set(const QuotientRingPtr& ring, const ModuleSpec& m,
                                     int i, std::span<const IdealHandle> qs,
                                     std::uint64_t seed, const FitOptions& opts) {
  const int r = m.dimension(*ring);
  if (i < 1 || i > r) throw DomainError("index i must be in [1, dim M]");
  ExplorationReport rep;
  rep.target = "e_" + std::to_string(i) + "(Q," + m.describe() + ")";
  rep.seed = seed;
  for (const IdealHandle& q : qs) {
    SampleRecord rec;
    rec.q_generators = gen_strings(q);
    try {
      const CoefficientVector e = samuel_coeffs(q, m, opts);
      rec.value = e.values[static_cast<std::size_t>(i)];
    } catch (const PostulationError& e) {
      rec.note = e.what();
    }
    rep.samples.push_back(std::move(rec));
  }
  finalize(rep);
  return rep;
}

G1BoundReport check_g1_bounds(const IdealHandle& k, std::span<const IdealHandle> qs,
                              std::span<const long long> lh, std::uint64_t seed,
                              const FitOptions& opts) {
  const int d = k.ring()->dimension();
  if (d < 2) throw DomainError("g_1 bounds need dim R >= 2");
  if (static_cast<int>(lh.size()) < d)
    throw DomainError("need cohomology lengths lh[0..d-1]");
  const std::optional<long long> len_rk = k.quotient_length();
  if (!len_rk) throw DomainError("K must be m-primary");

  long long lower = -*len_rk;
  for (int i = 1; i <= d - 1; ++i)
    lower -= binomial(d - 2, i - 1) * lh[static_cast<std::size_t>(i)];

  G1BoundReport rep;
  rep.lower_bound = lower;
  rep.base = explore_relative_set(k, 1, qs, seed, opts);
  rep.base.target = "g_1^K bounds";
  for (std::size_t t = 0; t < rep.base.samples.size(); ++t) {
    const SampleRecord& rec = rep.base.samples[t];
    if (!rec.value) continue;
    if (*rec.value < lower || *rec.value > 0)
      rep.base.violations.push_back(
          "sample " + std::to_string(t) + ": g_1 = " + std::to_string(*rec.value) +
          " outside [" + std::to_string(lower) + ", 0]");
  }
  rep.all_within = rep.base.violations.empty();
  return rep;
}

EnvelopeReport check_growth_envelope(const IdealHandle& q, const ModuleSpec& m,
                                     long long i_m, int n_check,
                                     const FitOptions& opts) {
  if (i_m < 0) throw DomainError("I_M must be nonnegative");
  HilbertSweep sweep(q);
  const int r = m.dimension(*q.ring());
  if (r < 1) throw DomainError("growth envelope needs dim M >= 1");
  SeriesCache series([&](int n) { return sweep.samuel(m, n); });
  const CoefficientVector e =
      fit_binomial_series(series, r, 0, CoefficientVector::Kind::samuel, opts);

  EnvelopeReport rep;
  rep.e0 = e.values[0];
  rep.r = r;
  rep.i_m = i_m;
  rep.all_ok = true;
  for (int n = 0; n <= n_check; ++n) {
    EnvelopeRow row;
    row.n = n;
    row.deviation = series.at(n + 1) - rep.e0 * binomial(n + r, r);
    row.upper = binomial(n + r - 1, r - 1) * i_m;
    row.lower = -static_cast<long long>(r) * binomial(n + r - 1, r - 1) * i_m;
    row.ok = row.lower <= row.deviation && row.deviation <= row.upper;
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

ExplorationReport check_e1_bound(const QuotientRingPtr& ring, const ModuleSpec& m,
                                 long long i_m, std::span<const IdealHandle> qs,
                                 std::uint64_t seed, const FitOptions& opts) {
  ExplorationReport rep = explore_samuel_set(ring, m, 1, qs, seed, opts);
  rep.target = "|e_1(Q," + m.describe() + ")| <= " + std::to_string(i_m);
  for (std::size_t t = 0; t < rep.samples.size(); ++t) {
    const SampleRecord& rec = rep.samples[t];
    if (rec.value && std::llabs(*rec.value) > i_m)
      rep.violations.push_back("sample " + std::to_string(t) + ": |e_1| = " +
                               std::to_string(std::llabs(*rec.value)) + " > " +
                               std::to_string(i_m));
  }
  return rep;
}

namespace {

long long ipow(long long base, int e) {
  long long acc = 1;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

// (r-1)/2 e0 k^r + (2 e1 - (r-1) e0)/2 k^{r-1}, exact in integers.
long long scaled_e1(long long e0, long long e1, int r, int k) {
  const __int128 num = static_cast<__int128>(ipow(k, r - 1)) *
                       ((static_cast<__int128>(r - 1) * e0 * (k - 1)) + 2 * e1);
  if (num % 2 != 0) throw InternalError("scaling law parity violated");
  return static_cast<long long>(num / 2);
}

} // namespace

ScalingReport power_scaling_check(const IdealHandle& i, const ModuleSpec& m, int k_max,
                                  const FitOptions& opts) {
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  ScalingReport rep;
  const CoefficientVector base = samuel_coeffs(i, m, opts);
  rep.r = base.degree;
  if (rep.r < 1) throw DomainError("scaling law needs dim M >= 1");
  rep.base_e0 = base.values[0];
  rep.base_e1 = base.values[1];
  rep.all_ok = true;
  for (int k = 1; k <= k_max; ++k) {
    const CoefficientVector ck = samuel_coeffs(ideal_power(i, static_cast<unsigned>(k)), m, opts);
    ScalingRow row;
    row.k = k;
    row.e0 = ck.values[0];
    row.e1 = ck.values[1];
    row.e0_expected = ipow(k, rep.r) * rep.base_e0;
    row.e1_expected = scaled_e1(rep.base_e0, rep.base_e1, rep.r, k);
    row.ok = row.e0 == row.e0_expected && row.e1 == row.e1_expected;
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

ScalingReport semigroup_power_scaling_check(const SemigroupIdeal& i, int k_max,
                                            const FitOptions& opts) {
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  ScalingReport rep;
  const CoefficientVector base = semigroup_samuel_coeffs(i, nullptr, opts);
  rep.r = 1;
  rep.base_e0 = base.values[0];
  rep.base_e1 = base.values[1];
  rep.all_ok = true;
  for (int k = 1; k <= k_max; ++k) {
    const CoefficientVector ck = semigroup_samuel_coeffs(k_fold(i, k), nullptr, opts);
    ScalingRow row;
    row.k = k;
    row.e0 = ck.values[0];
    row.e1 = ck.values[1];
    row.e0_expected = k * rep.base_e0;
    row.e1_expected = rep.base_e1;
    row.ok = row.e0 == row.e0_expected && row.e1 == row.e1_expected;
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

ProbeReport buchsbaum_probe(const IdealHandle& k, std::span<const IdealHandle> qs,
                            std::uint64_t seed, const FitOptions& opts) {
  ProbeReport rep;
  rep.seed = seed;
  rep.d = k.ring()->dimension();
  const std::optional<long long> len_rk = k.quotient_length();
  if (!len_rk || !k.is_proper()) throw DomainError("K must be a proper m-primary ideal");
  rep.len_r_mod_k = *len_rk;

  const IdealHandle max_ideal = maximal_ideal(k.ring());
  rep.i_ring_constant = true;
  rep.gap_is_d_minus_1 = true;
  rep.qk_colength_matches = true;

  for (std::size_t t = 0; t < qs.size(); ++t) {
    const IdealHandle& q = qs[t];
    HilbertSweep sweep(q);
    ProbeRow row;
    row.q_generators = gen_strings(q);
    const CoefficientVector e_ring = [&] {
      SeriesCache s([&](int n) { return sweep.samuel(ModuleSpec::ring(), n); });
      return fit_binomial_series(s, rep.d, 0, CoefficientVector::Kind::samuel, opts);
    }();
    const CoefficientVector e_max = [&] {
      const ModuleSpec mm = ModuleSpec::ideal_module(max_ideal);
      SeriesCache s([&](int n) { return sweep.samuel(mm, n); });
      return fit_binomial_series(s, rep.d, 0, CoefficientVector::Kind::samuel, opts);
    }();
    row.i_q_ring = sweep.samuel(ModuleSpec::ring(), 1) - e_ring.values[0];
    row.i_q_max = sweep.samuel(ModuleSpec::ideal_module(max_ideal), 1) - e_max.values[0];
    row.len_r_qk = sweep.relative(k, 1);
    row.len_q_qk = row.len_r_qk - sweep.samuel(ModuleSpec::ring(), 1);

    if (!rep.rows.empty() && row.i_q_ring != rep.rows.front().i_q_ring) {
      rep.i_ring_constant = false;
      rep.violations.push_back("sample " + std::to_string(t) + ": I(Q;R) = " +
                               std::to_string(row.i_q_ring) + " differs from first sample");
    }
    if (row.i_q_max - row.i_q_ring != rep.d - 1) {
      rep.gap_is_d_minus_1 = false;
      rep.violations.push_back("sample " + std::to_string(t) + ": I(Q;m) - I(Q;R) = " +
                               std::to_string(row.i_q_max - row.i_q_ring));
    }
    if (row.len_q_qk != rep.d * rep.len_r_mod_k) {
      rep.qk_colength_matches = false;
      rep.violations.push_back("sample " + std::to_string(t) + ": l(Q/QK) = " +
                               std::to_string(row.len_q_qk) + " != d*l(R/K)");
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

} // namespace hilb
