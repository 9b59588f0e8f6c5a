#pragma once

#include <cstdint>
#include <utility>

#include "hilb/errors.hpp"

namespace hilb {

/// A residue in [0, p). The modulus lives in the owning PrimeField; scalars
/// from different rings must never be mixed (callers compare ring handles).
struct FieldScalar {
  std::uint32_t value = 0;

  bool is_zero() const { return value == 0; }
  friend bool operator==(FieldScalar a, FieldScalar b) { return a.value == b.value; }
  friend bool operator!=(FieldScalar a, FieldScalar b) { return a.value != b.value; }
};

/// Arithmetic context for F_p, p an odd prime. Primality is verified by
/// trial division at construction.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
      throw DomainError("characteristic must be an odd prime, got " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  FieldScalar from_int(long long x) const {
    long long r = x % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  FieldScalar zero() const { return {0}; }
  FieldScalar one() const { return {1}; }

  FieldScalar add(FieldScalar a, FieldScalar b) const {
    std::uint32_t s = a.value + b.value;
    if (s >= p_) s -= p_;
    return {s};
  }

  FieldScalar sub(FieldScalar a, FieldScalar b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }

  FieldScalar neg(FieldScalar a) const {
    return {a.value == 0 ? 0 : p_ - a.value};
  }

  FieldScalar mul(FieldScalar a, FieldScalar b) const {
    return {static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.value) * b.value) % p_)};
  }

  FieldScalar inv(FieldScalar a) const {
    if (a.value == 0) throw DomainError("inverse of zero in F_p");
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a.value;
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return {static_cast<std::uint32_t>(t)};
  }

  FieldScalar div(FieldScalar a, FieldScalar b) const { return mul(a, inv(b)); }

  FieldScalar pow(FieldScalar a, std::uint64_t e) const {
    FieldScalar acc = one();
    FieldScalar base = a;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  std::uint32_t p_;
};

} // namespace hilb
