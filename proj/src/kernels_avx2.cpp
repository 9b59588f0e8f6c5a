// AVX2 variants of the exponent-vector kernels. This translation unit is
// compiled with -mavx2; callers must check avx2_available() before use.
#include "hilb/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace hilb::kernels {

namespace {

inline __m256i load(const Exp* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Exp* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void avx2_add(const Exp* a, const Exp* b, Exp* out) {
  store(out, _mm256_add_epi16(load(a), load(b)));
}

void avx2_sub(const Exp* a, const Exp* b, Exp* out) {
  store(out, _mm256_sub_epi16(load(a), load(b)));
}

void avx2_max(const Exp* a, const Exp* b, Exp* out) {
  store(out, _mm256_max_epu16(load(a), load(b)));
}

bool avx2_leq(const Exp* a, const Exp* b) {
  const __m256i va = load(a);
  // a <= b lanewise iff min(a, b) == a in every lane.
  const __m256i eq = _mm256_cmpeq_epi16(_mm256_min_epu16(va, load(b)), va);
  return _mm256_movemask_epi8(eq) == -1;
}

bool avx2_eq(const Exp* a, const Exp* b) {
  const __m256i eq = _mm256_cmpeq_epi16(load(a), load(b));
  return _mm256_movemask_epi8(eq) == -1;
}

int avx2_last_diff(const Exp* a, const Exp* b) {
  const __m256i eq = _mm256_cmpeq_epi16(load(a), load(b));
  const std::uint32_t diff = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(eq));
  if (diff == 0) return -1;
  // Two mask bits per u16 lane.
  return (31 - __builtin_clz(diff)) >> 1;
}

std::uint32_t avx2_sum(const Exp* a) {
  const __m256i prods = _mm256_madd_epi16(load(a), _mm256_set1_epi16(1));
  const __m128i lo = _mm256_castsi256_si128(prods);
  const __m128i hi = _mm256_extracti128_si256(prods, 1);
  __m128i s = _mm_add_epi32(lo, hi);
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
}

} // namespace

const Backend& avx2_backend() {
  static const Backend backend{
      "avx2",   avx2_add, avx2_sub,       avx2_max,
      avx2_leq, avx2_eq,  avx2_last_diff, avx2_sum,
  };
  return backend;
}

} // namespace hilb::kernels

#else // non-x86: no AVX2 backend, avx2_available() reports false

namespace hilb::kernels {

const Backend& avx2_backend() { return scalar_backend(); }

} // namespace hilb::kernels

#endif
