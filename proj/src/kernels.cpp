#include "hilb/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hilb::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Backend& active_backend() {
  static const Backend* selected = [] {
    const char* force = std::getenv("HILB_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "0") != 0)
      return &scalar_backend();
    return avx2_available() ? &avx2_backend() : &scalar_backend();
  }();
  return *selected;
}

} // namespace hilb::kernels
