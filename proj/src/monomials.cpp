#include "fatlin/monomials.hpp"

#include <stdexcept>
#include <string>

namespace fatlin {

namespace {

using PowerTable = std::array<std::vector<std::uint32_t>, 4>;

PowerTable powers(const PrimeField& field, const Point4& pt, int degree) {
  PowerTable t;
  for (int v = 0; v < 4; ++v) {
    t[v].resize(static_cast<std::size_t>(degree) + 1);
    t[v][0] = 1;
    for (int e = 1; e <= degree; ++e) t[v][e] = field.mul(t[v][e - 1], pt[v]);
  }
  return t;
}

}  // namespace

std::vector<Exponent> graded_lex_exponents(int degree) {
  if (degree < 0 || degree > 255) {
    throw std::invalid_argument("graded_lex_exponents: degree " + std::to_string(degree) +
                                " out of range");
  }
  std::vector<Exponent> out;
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) {
      for (int c = degree - a - b; c >= 0; --c) {
        out.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                       static_cast<std::uint8_t>(c),
                       static_cast<std::uint8_t>(degree - a - b - c)});
      }
    }
  }
  return out;
}

MonomialBasis::MonomialBasis(int degree) : degree_(degree), exps_(graded_lex_exponents(degree)) {}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  const int a = e[0], b = e[1], c = e[2];
  if (a + b + c + e[3] != degree_) throw std::invalid_argument("index_of: wrong total degree");
  std::size_t idx = 0;
  for (int a2 = degree_; a2 > a; --a2) {
    std::size_t rest = static_cast<std::size_t>(degree_ - a2);
    idx += (rest + 1) * (rest + 2) / 2;
  }
  const int rem = degree_ - a;
  for (int b2 = rem; b2 > b; --b2) idx += static_cast<std::size_t>(rem - b2 + 1);
  idx += static_cast<std::size_t>(rem - b - c);
  return idx;
}

void evaluate_monomials(const MonomialBasis& basis, const PrimeField& field, const Point4& pt,
                        std::span<std::uint32_t> out) {
  const auto t = powers(field, pt, basis.degree());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Exponent& e = basis[j];
    out[j] = field.mul(field.mul(t[0][e[0]], t[1][e[1]]), field.mul(t[2][e[2]], t[3][e[3]]));
  }
}

void derivative_row(const MonomialBasis& basis, const PrimeField& field, const Point4& pt,
                    const Exponent& alpha, std::span<std::uint32_t> out) {
  const int d = basis.degree();
  const auto t = powers(field, pt, d);
  // falling[v][b] = b (b-1) ... (b - alpha_v + 1)
  std::array<std::vector<std::uint32_t>, 4> falling;
  for (int v = 0; v < 4; ++v) {
    falling[v].assign(static_cast<std::size_t>(d) + 1, 0);
    for (int b = alpha[v]; b <= d; ++b) {
      std::uint32_t f = 1;
      for (int k = 0; k < alpha[v]; ++k) f = field.mul(f, static_cast<std::uint32_t>(b - k));
      falling[v][b] = f;
    }
  }
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Exponent& e = basis[j];
    std::uint32_t acc = 1;
    for (int v = 0; v < 4 && acc != 0; ++v) {
      if (e[v] < alpha[v]) {
        acc = 0;
        break;
      }
      acc = field.mul(acc, field.mul(falling[v][e[v]], t[v][e[v] - alpha[v]]));
    }
    out[j] = acc;
  }
}

void directional_derivative(const MonomialBasis& basis, const PrimeField& field,
                            const Point4& pt, const Point4& dir, std::span<std::uint32_t> out) {
  const auto t = powers(field, pt, basis.degree());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Exponent& e = basis[j];
    std::uint32_t acc = 0;
    for (int v = 0; v < 4; ++v) {
      if (e[v] == 0 || dir[v] == 0) continue;
      std::uint32_t term = field.mul(static_cast<std::uint32_t>(e[v]), dir[v]);
      for (int u = 0; u < 4; ++u) {
        term = field.mul(term, t[u][u == v ? e[u] - 1 : e[u]]);
      }
      acc = field.add(acc, term);
    }
    out[j] = acc;
  }
}

}  // namespace fatlin
