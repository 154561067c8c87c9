#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace fatlin {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Word-sized primes congruent to 3 mod 4 used by the default trial battery.
const std::vector<std::uint32_t>& default_primes();

/// A projective point of P^3 over GF(p), coordinates (x, y, z, w).
using Point4 = std::array<std::uint32_t, 4>;

/// Arithmetic in GF(p) for an odd prime 3 <= p < 2^31.
///
/// Elements are canonical residues in [0, p). The bound on p keeps every
/// product below 2^62 and lets the vector kernels use 32-bit lanes with a
/// single conditional correction.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

  /// Barrett reduction of a full 62-bit product.
  std::uint32_t reduce(std::uint64_t x) const noexcept {
    auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    return static_cast<std::uint32_t>(r >= p_ ? r - p_ : r);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error on zero.
  std::uint32_t inv(std::uint32_t a) const;

  std::uint32_t from_int(std::int64_t v) const noexcept;
  /// Representative in (-p/2, p/2], used only for display.
  std::int64_t to_signed(std::uint32_t a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  /// Euler's criterion; zero counts as a square.
  bool is_square(std::uint32_t a) const noexcept;
  /// Tonelli-Shanks. Returns nullopt for non-residues.
  std::optional<std::uint32_t> sqrt(std::uint32_t a) const noexcept;

  /// floor(f * 2^32 / p), the precomputed quotient for Shoup multiplication.
  std::uint32_t shoup(std::uint32_t f) const noexcept {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(f) << 32) / p_);
  }

  /// Uniform element of GF(p) by rejection sampling.
  std::uint32_t random(std::mt19937_64& rng) const noexcept {
    for (;;) {
      std::uint64_t v = rng();
      if (v < reject_above_) return static_cast<std::uint32_t>(v % p_);
    }
  }
  std::uint32_t random_nonzero(std::mt19937_64& rng) const noexcept {
    for (;;) {
      std::uint32_t v = random(rng);
      if (v != 0) return v;
    }
  }

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;
  std::uint64_t reject_above_;
  // p - 1 = odd_part_ * 2^two_adicity_
  std::uint64_t odd_part_ = 0;
  unsigned two_adicity_ = 0;
  std::uint32_t non_residue_ = 0;
};

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t x) noexcept;

}  // namespace fatlin
