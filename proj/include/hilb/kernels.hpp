#pragma once

#include <cstdint>

namespace hilb::kernels {

/// Exponent lane type. 16 lanes of u16 fill one 256-bit register, so a
/// monomial in up to 16 variables is processed by a single AVX2 op.
using Exp = std::uint16_t;

inline constexpr int lane_count = 16;

/// One set of exponent-vector kernels. Every routine reads and writes
/// exactly lane_count lanes; callers keep unused trailing lanes at zero.
struct Backend {
  const char* name;
  void (*add)(const Exp* a, const Exp* b, Exp* out);
  void (*sub)(const Exp* a, const Exp* b, Exp* out); // requires b[i] <= a[i]
  void (*max)(const Exp* a, const Exp* b, Exp* out);
  bool (*leq)(const Exp* a, const Exp* b);       // a[i] <= b[i] for all i
  bool (*eq)(const Exp* a, const Exp* b);
  int (*last_diff)(const Exp* a, const Exp* b);  // highest differing lane, -1 if none
  std::uint32_t (*sum)(const Exp* a);            // total degree
};

/// Portable reference implementation. The ground truth the SIMD variants
/// are equivalence-tested against.
const Backend& scalar_backend();

bool avx2_available();

/// AVX2 variants. Only callable when avx2_available().
const Backend& avx2_backend();

/// Backend selected at startup: AVX2 when the CPU supports it, unless the
/// environment variable HILB_FORCE_SCALAR=1 is set.
const Backend& active_backend();

} // namespace hilb::kernels
