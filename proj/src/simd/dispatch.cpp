#include <cstdlib>
#include <string_view>

#include "seedpdc/simd/kernels.hpp"

namespace seedpdc::simd {

#if defined(SEEDPDC_HAVE_AVX2)
const Kernels& avx2_kernel_table();
#endif

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

const Kernels* avx2_kernels() {
#if defined(SEEDPDC_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active() {
  static const Kernels& chosen = []() -> const Kernels& {
    const char* env = std::getenv("SEEDPDC_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const Kernels* k = avx2_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace seedpdc::simd
