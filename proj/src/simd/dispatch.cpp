#include <cstdlib>
#include <string_view>

#include "commgraph/simd/kernels.hpp"

namespace commgraph::simd {

const Kernels* avx2_kernels_unchecked();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const Kernels& select() {
  if (const char* forced = std::getenv("COMMGRAPH_SIMD"); forced && std::string_view(forced) == "scalar") {
    return scalar_kernels();
  }
  if (const Kernels* k = avx2_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels* k = cpu_has_avx2() ? avx2_kernels_unchecked() : nullptr;
  return k;
}

const Kernels& active() {
  static const Kernels& k = select();
  return k;
}

}  // namespace commgraph::simd
