#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilb/hilbert.hpp"
#include "hilb/semigroup.hpp"

namespace hilb {

/// Seeded sampling family: powers of random linear forms with coefficients
/// drawn from a small pool (zero allowed per slot, zero forms redrawn).
/// Identical (config, ring) always reproduces the same sample sequence; the
/// per-sample RNG stream is split from the master seed by sample index.
struct SamplerConfig {
  std::uint64_t seed = 1;
  int sample_count = 10;
  std::vector<int> coefficient_pool = {1, 2, 3};
  int power_min = 1;
  int power_max = 1;
  bool require_subset_of_k = false;
  int max_retries = 50;
};

/// Draws validated parameter ideals: dim(R/Q) = 0 with exactly d generators,
/// and every generator inside K when cfg.require_subset_of_k (the δ family).
/// Degenerate draws are rejected and redrawn up to cfg.max_retries.
std::vector<IdealHandle> sample_parameter_ideals(const QuotientRingPtr& ring,
                                                 const SamplerConfig& cfg,
                                                 const IdealHandle* k = nullptr);

struct SampleRecord {
  std::vector<std::string> q_generators;
  std::optional<long long> value;
  std::string note; // "postulation not reached", bound slack, ...
};

struct ExplorationReport {
  std::string target;
  std::uint64_t seed = 0;
  std::vector<SampleRecord> samples;
  std::vector<long long> observed; // sorted, deduplicated
  std::vector<std::string> violations;
  /// Window-relative label: constant | bounded-in-window | growing-in-window.
  std::string classification;
};

/// Λ_i^K / δ_i^K: the values g_i^K(Q) over the given parameter ideals.
ExplorationReport explore_relative_set(const IdealHandle& k, int i,
                                       std::span<const IdealHandle> qs,
                                       std::uint64_t seed,
                                       const FitOptions& opts = {});

/// Λ_i(M): the values e_i(Q, M).
ExplorationReport explore_samuel_set(const QuotientRingPtr& ring, const ModuleSpec& m,
                                     int i, std::span<const IdealHandle> qs,
                                     std::uint64_t seed, const FitOptions& opts = {});

struct G1BoundReport {
  ExplorationReport base;
  long long lower_bound = 0; // -sum binom(d-2,i-1) lh[i] - l(R/K) <= g_1 <= 0
  bool all_within = false;
};

/// Generalized Cohen-Macaulay bound check for g_1^K(Q); lh[i] supplies
/// l(H^i_m(R)) for 1 <= i <= d-1 (the ring is user-asserted GCM).
G1BoundReport check_g1_bounds(const IdealHandle& k, std::span<const IdealHandle> qs,
                              std::span<const long long> lh, std::uint64_t seed,
                              const FitOptions& opts = {});

struct EnvelopeRow {
  int n = 0;
  long long deviation = 0; // l(M/Q^{n+1}M) - e_0 binom(n+r, r)
  long long lower = 0, upper = 0;
  bool ok = false;
};

struct EnvelopeReport {
  long long e0 = 0;
  int r = 0;
  long long i_m = 0;
  std::vector<EnvelopeRow> rows;
  bool all_ok = false;
};

/// Exact two-sided growth envelope
///   -r binom(n+r-1, r-1) I_M <= l(M/Q^{n+1}M) - e_0 binom(n+r, r)
///                             <= binom(n+r-1, r-1) I_M
/// for n = 0..n_check.
EnvelopeReport check_growth_envelope(const IdealHandle& q, const ModuleSpec& m,
                                     long long i_m, int n_check,
                                     const FitOptions& opts = {});

/// |e_1(Q,M)| <= I_M per sampled parameter ideal.
ExplorationReport check_e1_bound(const QuotientRingPtr& ring, const ModuleSpec& m,
                                 long long i_m, std::span<const IdealHandle> qs,
                                 std::uint64_t seed, const FitOptions& opts = {});

struct ScalingRow {
  int k = 0;
  long long e0 = 0, e1 = 0;
  long long e0_expected = 0, e1_expected = 0;
  bool ok = false;
};

struct ScalingReport {
  int r = 0;
  long long base_e0 = 0, base_e1 = 0;
  std::vector<ScalingRow> rows;
  bool all_ok = false;
};

/// Checks the closed forms
///   e_0(I^k, M) = k^r e_0(I, M)
///   e_1(I^k, M) = (r-1)/2 e_0 k^r + (2 e_1 - (r-1) e_0)/2 k^{r-1}
/// with every side computed independently per k.
ScalingReport power_scaling_check(const IdealHandle& i, const ModuleSpec& m, int k_max,
                                  const FitOptions& opts = {});

/// Same law in the one-dimensional semigroup model (r = 1): e_0 scales by k,
/// e_1 stays constant.
ScalingReport semigroup_power_scaling_check(const SemigroupIdeal& i, int k_max,
                                            const FitOptions& opts = {});

struct ProbeRow {
  std::vector<std::string> q_generators;
  long long i_q_ring = 0;   // I(Q;R)
  long long i_q_max = 0;    // I(Q;m)
  long long len_r_qk = 0;   // l(R/QK)
  long long len_q_qk = 0;   // l(Q/QK)
};

struct ProbeReport {
  std::uint64_t seed = 0;
  int d = 0;
  long long len_r_mod_k = 0;
  std::vector<ProbeRow> rows;
  bool i_ring_constant = false;       // I(Q;R) same for every sample
  bool gap_is_d_minus_1 = false;      // I(Q;m) - I(Q;R) = d-1 per sample
  bool qk_colength_matches = false;   // l(Q/QK) = d l(R/K) per sample
  std::vector<std::string> violations;
};

/// Numeric probes from the Buchsbaum analysis: diagnostics, not theorems.
ProbeReport buchsbaum_probe(const IdealHandle& k, std::span<const IdealHandle> qs,
                            std::uint64_t seed, const FitOptions& opts = {});

} // namespace hilb
