#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fatlin/modp.hpp"

namespace fatlin {

/// Exponent vector of x^a y^b z^c w^e.
using Exponent = std::array<std::uint8_t, 4>;

/// All exponents of total degree `degree` in 4 variables, in graded-lex order
/// (x > y > z > w, larger exponents first).
std::vector<Exponent> graded_lex_exponents(int degree);

/// The C(d+3,3) degree-d monomials of P^3 with O(1) index lookup.
class MonomialBasis {
 public:
  explicit MonomialBasis(int degree);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return exps_.size(); }
  const Exponent& operator[](std::size_t i) const noexcept { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::size_t index_of(const Exponent& e) const;

 private:
  int degree_;
  std::vector<Exponent> exps_;
};

/// out[j] = monomial j evaluated at pt.
void evaluate_monomials(const MonomialBasis& basis, const PrimeField& field, const Point4& pt,
                        std::span<std::uint32_t> out);

/// out[j] = (d^alpha monomial j)(pt), the partial derivative of multi-order alpha.
void derivative_row(const MonomialBasis& basis, const PrimeField& field, const Point4& pt,
                    const Exponent& alpha, std::span<std::uint32_t> out);

/// out[j] = d/dt monomial j(pt + t*dir) at t = 0.
void directional_derivative(const MonomialBasis& basis, const PrimeField& field,
                            const Point4& pt, const Point4& dir, std::span<std::uint32_t> out);

}  // namespace fatlin
