// AVX2 variants of the modular kernels. This file is compiled with -mavx2 and
// must only be entered after the dispatcher has confirmed CPU support.

#include <immintrin.h>

#include "fatlin/simd/kernels.hpp"

namespace fatlin::simd {

namespace {

inline std::uint32_t mul_shoup(std::uint32_t x, std::uint32_t f, std::uint32_t f_shoup,
                               std::uint32_t p) {
  auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * f_shoup) >> 32);
  std::uint32_t r = x * f - q * p;
  return r >= p ? r - p : r;
}

// High 32 bits of the lane-wise 32x32 product.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0xAA);
}

// x*f mod p on 8 lanes; the unsigned-min trick replaces the conditional subtract.
inline __m256i mul_shoup8(__m256i x, __m256i f, __m256i f_shoup, __m256i p) {
  __m256i q = mulhi_epu32(x, f_shoup);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, f), _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

void submul_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t f, std::uint32_t f_shoup,
                 std::uint32_t p, std::size_t n) {
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(f));
  const __m256i vfs = _mm256_set1_epi32(static_cast<int>(f_shoup));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i t = mul_shoup8(vx, vf, vfs, vp);
    __m256i d = _mm256_sub_epi32(vy, t);
    d = _mm256_min_epu32(d, _mm256_add_epi32(d, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), d);
  }
  for (; i < n; ++i) {
    std::uint32_t t = mul_shoup(x[i], f, f_shoup, p);
    y[i] = y[i] >= t ? y[i] - t : y[i] + p - t;
  }
}

void scale_avx2(std::uint32_t* x, std::uint32_t f, std::uint32_t f_shoup, std::uint32_t p,
                std::size_t n) {
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(f));
  const __m256i vfs = _mm256_set1_epi32(static_cast<int>(f_shoup));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), mul_shoup8(vx, vf, vfs, vp));
  }
  for (; i < n; ++i) x[i] = mul_shoup(x[i], f, f_shoup, p);
}

// Each 64-bit lane takes at most four products (< 2^62 each) between flushes,
// so the accumulators never wrap.
std::uint32_t dot_avx2(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t p,
                       std::size_t n) {
  unsigned __int128 total = 0;
  std::size_t i = 0;
  while (i + 8 <= n) {
    __m256i acc_even = _mm256_setzero_si256();
    __m256i acc_odd = _mm256_setzero_si256();
    for (int k = 0; k < 4 && i + 8 <= n; ++k, i += 8) {
      __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      acc_even = _mm256_add_epi64(acc_even, _mm256_mul_epu32(va, vb));
      acc_odd = _mm256_add_epi64(
          acc_odd, _mm256_mul_epu32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
    }
    alignas(32) std::uint64_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc_even);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes + 4), acc_odd);
    for (std::uint64_t lane : lanes) total += lane;
  }
  for (; i < n; ++i) total += static_cast<std::uint64_t>(a[i]) * b[i];
  return static_cast<std::uint32_t>(total % p);
}

constexpr ModKernels kAvx2{Isa::Avx2, submul_avx2, scale_avx2, dot_avx2};

}  // namespace

const ModKernels& avx2_kernels() noexcept { return kAvx2; }

}  // namespace fatlin::simd
