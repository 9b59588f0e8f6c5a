#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

#include "hilb/errors.hpp"
#include "hilb/kernels.hpp"

namespace hilb {

/// Exponent vector with one slot per ring variable. Storage is a fixed
/// 16-lane block so the componentwise operations map onto single SIMD ops;
/// lanes beyond the variable count stay zero.
class Monomial {
public:
  static constexpr int max_vars = kernels::lane_count;

  Monomial() = default;

  explicit Monomial(int nvars) : nvars_(static_cast<std::uint16_t>(nvars)) {
    check_nvars(nvars);
    exps_.fill(0);
  }

  Monomial(int nvars, std::initializer_list<int> exps) : Monomial(nvars) {
    int i = 0;
    for (int e : exps) set_exponent(i++, e);
  }

  static Monomial one(int nvars) { return Monomial(nvars); }

  int nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }

  int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }

  void set_exponent(int i, int e) {
    if (i < 0 || i >= nvars_) throw DomainError("variable index out of range");
    if (e < 0) throw DomainError("negative exponent");
    if (e > 0xFFFF) throw DomainError("exponent exceeds representable range");
    degree_ += static_cast<unsigned>(e) - exps_[static_cast<std::size_t>(i)];
    exps_[static_cast<std::size_t>(i)] = static_cast<kernels::Exp>(e);
  }

  bool is_one() const { return degree_ == 0; }

  Monomial times(const Monomial& o) const {
    Monomial r(nvars_);
    kernels::active_backend().add(data(), o.data(), r.exps_.data());
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  /// Componentwise quotient; caller guarantees o.divides(*this).
  Monomial divided_by(const Monomial& o) const {
    Monomial r(nvars_);
    kernels::active_backend().sub(data(), o.data(), r.exps_.data());
    r.degree_ = degree_ - o.degree_;
    return r;
  }

  Monomial lcm_with(const Monomial& o) const {
    Monomial r(nvars_);
    const auto& k = kernels::active_backend();
    k.max(data(), o.data(), r.exps_.data());
    r.degree_ = k.sum(r.data());
    return r;
  }

  bool divides(const Monomial& o) const {
    return degree_ <= o.degree_ && kernels::active_backend().leq(data(), o.data());
  }

  bool coprime_with(const Monomial& o) const {
    for (int i = 0; i < nvars_; ++i)
      if (exps_[static_cast<std::size_t>(i)] != 0 && o.exps_[static_cast<std::size_t>(i)] != 0)
        return false;
    return true;
  }

  /// Bitmask of variables with positive exponent.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (int i = 0; i < nvars_; ++i)
      if (exps_[static_cast<std::size_t>(i)] != 0) m |= 1u << i;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ &&
           kernels::active_backend().eq(a.data(), b.data());
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  const kernels::Exp* data() const { return exps_.data(); }

private:
  static void check_nvars(int nvars) {
    if (nvars < 0 || nvars > max_vars)
      throw DomainError("variable count must be in [0, " + std::to_string(max_vars) + "]");
  }

  std::array<kernels::Exp, max_vars> exps_{};
  std::uint16_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

/// Total orders on monomials. degrevlex and lex are the user-facing orders;
/// elimination orders are built internally for colon/saturation, with the
/// variables at index >= split dominating the rest.
struct MonomialOrder {
  enum class Kind { degrevlex, lex, elimination };

  Kind kind = Kind::degrevlex;
  int split = 0;

  static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder elimination(int split) { return {Kind::elimination, split}; }
};

/// Three-way comparison: negative when a < b, zero when equal.
int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

inline bool order_less(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
  return compare(o, a, b) < 0;
}

} // namespace hilb
