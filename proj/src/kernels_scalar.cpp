#include "hilb/kernels.hpp"

namespace hilb::kernels {

namespace {

void scalar_add(const Exp* a, const Exp* b, Exp* out) {
  for (int i = 0; i < lane_count; ++i) out[i] = static_cast<Exp>(a[i] + b[i]);
}

void scalar_sub(const Exp* a, const Exp* b, Exp* out) {
  for (int i = 0; i < lane_count; ++i) out[i] = static_cast<Exp>(a[i] - b[i]);
}

void scalar_max(const Exp* a, const Exp* b, Exp* out) {
  for (int i = 0; i < lane_count; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool scalar_leq(const Exp* a, const Exp* b) {
  for (int i = 0; i < lane_count; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool scalar_eq(const Exp* a, const Exp* b) {
  for (int i = 0; i < lane_count; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

int scalar_last_diff(const Exp* a, const Exp* b) {
  for (int i = lane_count - 1; i >= 0; --i)
    if (a[i] != b[i]) return i;
  return -1;
}

std::uint32_t scalar_sum(const Exp* a) {
  std::uint32_t s = 0;
  for (int i = 0; i < lane_count; ++i) s += a[i];
  return s;
}

} // namespace

const Backend& scalar_backend() {
  static const Backend backend{
      "scalar",    scalar_add, scalar_sub,       scalar_max,
      scalar_leq,  scalar_eq,  scalar_last_diff, scalar_sum,
  };
  return backend;
}

} // namespace hilb::kernels
