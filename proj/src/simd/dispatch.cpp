#include <stdexcept>
#include <string>

#include "fatlin/simd/kernels.hpp"

namespace fatlin::simd {

#ifdef FATLIN_HAVE_AVX2_TU
const ModKernels& avx2_kernels() noexcept;
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(FATLIN_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (cpu_has_avx2()) out.push_back(Isa::Avx2);
  return out;
}

const ModKernels& kernels_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return scalar_kernels();
    case Isa::Avx2:
#ifdef FATLIN_HAVE_AVX2_TU
      if (cpu_has_avx2()) return avx2_kernels();
#endif
      break;
  }
  throw std::runtime_error("kernels_for: instruction set " + std::string(isa_name(isa)) +
                           " is not available on this machine");
}

const ModKernels& kernels() noexcept {
  static const ModKernels& best = cpu_has_avx2() ? kernels_for(Isa::Avx2) : scalar_kernels();
  return best;
}

}  // namespace fatlin::simd
