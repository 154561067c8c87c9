#include "fatlin/modp.hpp"

#include <stdexcept>
#include <string>

namespace fatlin {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const std::vector<std::uint32_t>& default_primes() {
  static const std::vector<std::uint32_t> primes{2147483647u, 2147483587u, 2147483579u};
  return primes;
}

std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("PrimeField: " + std::to_string(p) +
                                " is not an odd prime below 2^31");
  }
  barrett_ = ~std::uint64_t{0} / p_;
  reject_above_ = (~std::uint64_t{0} / p_) * p_;
  odd_part_ = p_ - 1;
  while ((odd_part_ & 1) == 0) {
    odd_part_ >>= 1;
    ++two_adicity_;
  }
  for (std::uint32_t z = 2; z < p_; ++z) {
    if (!is_square(z)) {
      non_residue_ = z;
      break;
    }
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

bool PrimeField::is_square(std::uint32_t a) const noexcept {
  return a == 0 || pow(a, (p_ - 1) / 2) == 1;
}

std::optional<std::uint32_t> PrimeField::sqrt(std::uint32_t a) const noexcept {
  if (a == 0) return 0u;
  if (!is_square(a)) return std::nullopt;
  if (two_adicity_ == 1) return pow(a, (static_cast<std::uint64_t>(p_) + 1) / 4);

  unsigned m = two_adicity_;
  std::uint32_t c = pow(non_residue_, odd_part_);
  std::uint32_t t = pow(a, odd_part_);
  std::uint32_t r = pow(a, (odd_part_ + 1) / 2);
  while (t != 1) {
    unsigned i = 0;
    std::uint32_t t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    std::uint32_t b = c;
    for (unsigned j = 0; j + 1 < m - i; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

}  // namespace fatlin
