#pragma once

// Zeros of a section on the anticanonical curve D, computed exactly.
//
// In the chart (s u, s, u, 1) the section becomes f(s, u) and D becomes
// G(s, u) = Q'(s u, s, u, 1). Res_u(G, f) is a polynomial of degree <= 4d in s
// whose roots are the s-coordinates of the points of D n {f = 0}. Dividing out
// the known points leaves the residual divisor; when that has degree <= 2 its
// points are recovered by root finding and a gcd in u.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fatlin/geometry.hpp"
#include "fatlin/monomials.hpp"
#include "fatlin/unipoly.hpp"

namespace fatlin {

/// f(s, u) as a (d+1) x (d+1) table: coeff[i][j] multiplies s^i u^j.
using ChartPoly = std::vector<std::vector<std::uint32_t>>;

ChartPoly restrict_to_chart(const MonomialBasis& basis, std::span<const std::uint32_t> section,
                            const PrimeField& f);

/// Coefficients in u of f(s0, u), degree 0 upward, length d+1.
UniPoly chart_fibre(const ChartPoly& poly, std::uint32_t s0, const PrimeField& f);

/// Res_u(G, f) with formal u-degrees (2, d), as a polynomial in s.
UniPoly curve_resultant(const GeometrySetup& g, const ChartPoly& poly, const PrimeField& f);

struct ResidualPoints {
  bool evaluated = false;
  int degree = -1;  ///< degree in s of the residual factor
  std::vector<CurvePoint> points;
  std::string note;
};

/// Zeros of `section` on D other than the base points P_i (taken with
/// multiplicity mults[i]). `known`, if given, is divided out once; it is
/// listed again only if the section meets D there with multiplicity >= 2.
ResidualPoints residual_points_on_curve(const GeometrySetup& g, std::span<const int> mults,
                                        const MonomialBasis& basis,
                                        std::span<const std::uint32_t> section,
                                        const PrimeField& f, const CurvePoint* known = nullptr);

}  // namespace fatlin
