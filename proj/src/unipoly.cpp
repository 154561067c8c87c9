#include "fatlin/unipoly.hpp"

#include <stdexcept>
#include <utility>

namespace fatlin {

void trim(UniPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UniPoly& f) {
  for (std::size_t i = f.size(); i > 0; --i) {
    if (f[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

std::uint32_t eval(const UniPoly& f, std::uint32_t x, const PrimeField& field) {
  std::uint32_t acc = 0;
  for (std::size_t i = f.size(); i > 0; --i) acc = field.add(field.mul(acc, x), f[i - 1]);
  return acc;
}

UniPoly interpolate(std::span<const std::uint32_t> xs, std::span<const std::uint32_t> ys,
                    const PrimeField& field) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  // Divided differences in place.
  std::vector<std::uint32_t> c(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      std::uint32_t den = field.sub(xs[i], xs[i - j]);
      c[i] = field.mul(field.sub(c[i], c[i - 1]), field.inv(den));
      if (i == j) break;
    }
  }
  // Horner expansion of the Newton form.
  UniPoly f{n ? c[n - 1] : 0u};
  for (std::size_t i = n - 1; i-- > 0;) {
    UniPoly next(f.size() + 1, 0);
    for (std::size_t k = 0; k < f.size(); ++k) {
      next[k + 1] = field.add(next[k + 1], f[k]);
      next[k] = field.sub(next[k], field.mul(f[k], xs[i]));
    }
    next[0] = field.add(next[0], c[i]);
    f = std::move(next);
  }
  trim(f);
  return f;
}

std::uint32_t divide_by_linear(UniPoly& f, std::uint32_t root, const PrimeField& field) {
  trim(f);
  if (f.empty()) return 0;
  std::uint32_t carry = 0;
  for (std::size_t i = f.size(); i > 0; --i) {
    std::uint32_t coeff = field.add(f[i - 1], field.mul(carry, root));
    f[i - 1] = carry;
    carry = coeff;
  }
  trim(f);
  return carry;
}

UniPoly gcd(UniPoly a, UniPoly b, const PrimeField& field) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    std::uint32_t lead_inv = field.inv(b.back());
    while (degree(a) >= degree(b)) {
      std::size_t shift = a.size() - b.size();
      std::uint32_t f = field.mul(a.back(), lead_inv);
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i + shift] = field.sub(a[i + shift], field.mul(f, b[i]));
      }
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    std::uint32_t li = field.inv(a.back());
    for (auto& c : a) c = field.mul(c, li);
  }
  return a;
}

std::optional<std::vector<std::uint32_t>> small_degree_roots(const UniPoly& f,
                                                             const PrimeField& field) {
  int deg = degree(f);
  if (deg == 1) {
    return std::vector<std::uint32_t>{field.mul(field.neg(f[0]), field.inv(f[1]))};
  }
  if (deg != 2) return std::nullopt;
  const std::uint32_t a = f[2], b = f[1], c = f[0];
  std::uint32_t disc = field.sub(field.mul(b, b), field.mul(4, field.mul(a, c)));
  auto root = field.sqrt(disc);
  if (!root) return std::vector<std::uint32_t>{};
  std::uint32_t inv2a = field.inv(field.mul(2, a));
  return std::vector<std::uint32_t>{field.mul(field.add(field.neg(b), *root), inv2a),
                                    field.mul(field.sub(field.neg(b), *root), inv2a)};
}

}  // namespace fatlin
