#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fatlin/modp.hpp"

namespace fatlin {

/// Dense univariate polynomial over GF(p), coefficients from degree 0 upward.
/// Normalized values carry no trailing zeros; the zero polynomial is empty.
using UniPoly = std::vector<std::uint32_t>;

void trim(UniPoly& f);
/// -1 for the zero polynomial.
int degree(const UniPoly& f);
std::uint32_t eval(const UniPoly& f, std::uint32_t x, const PrimeField& field);

/// Newton interpolation through (xs[i], ys[i]); xs must be distinct.
UniPoly interpolate(std::span<const std::uint32_t> xs, std::span<const std::uint32_t> ys,
                    const PrimeField& field);

/// Synthetic division by (x - root). Returns the remainder f(root).
std::uint32_t divide_by_linear(UniPoly& f, std::uint32_t root, const PrimeField& field);

/// Monic greatest common divisor.
UniPoly gcd(UniPoly a, UniPoly b, const PrimeField& field);

/// All roots in GF(p) of a polynomial of degree 1 or 2, with multiplicity.
/// Returns nullopt for other degrees.
std::optional<std::vector<std::uint32_t>> small_degree_roots(const UniPoly& f,
                                                             const PrimeField& field);

}  // namespace fatlin
