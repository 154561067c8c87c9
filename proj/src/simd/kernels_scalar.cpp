#include "fatlin/simd/kernels.hpp"

namespace fatlin::simd {

namespace {

// Shoup multiplication: r = x*f mod p given f' = floor(f*2^32/p). The
// intermediate lies in [0, 2p), which fits in 32 bits because p < 2^31.
inline std::uint32_t mul_shoup(std::uint32_t x, std::uint32_t f, std::uint32_t f_shoup,
                               std::uint32_t p) {
  auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * f_shoup) >> 32);
  std::uint32_t r = x * f - q * p;
  return r >= p ? r - p : r;
}

void submul_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t f,
                   std::uint32_t f_shoup, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t t = mul_shoup(x[i], f, f_shoup, p);
    y[i] = y[i] >= t ? y[i] - t : y[i] + p - t;
  }
}

void scale_scalar(std::uint32_t* x, std::uint32_t f, std::uint32_t f_shoup, std::uint32_t p,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = mul_shoup(x[i], f, f_shoup, p);
}

std::uint32_t dot_scalar(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t p,
                         std::size_t n) {
  unsigned __int128 acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += static_cast<std::uint64_t>(a[i]) * b[i];
  return static_cast<std::uint32_t>(acc % p);
}

constexpr ModKernels kScalar{Isa::Scalar, submul_scalar, scale_scalar, dot_scalar};

}  // namespace

const ModKernels& scalar_kernels() noexcept { return kScalar; }

}  // namespace fatlin::simd
