#pragma once

// Sampling geometry for the oracle: the smooth quadric xw - yz = 0 with its
// Segre parametrization ((s:t),(u:v)) -> (su, sv, tu, tv), a second random
// quadric Q', and points on the quartic curve D = {xw = yz} n {Q' = 0}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "fatlin/criteria.hpp"
#include "fatlin/modp.hpp"

namespace fatlin {

/// Quadratic form in (x, y, z, w); coefficients of x^2, xy, xz, xw, y^2, yz,
/// yw, z^2, zw, w^2 (graded-lex order).
struct QuadricForm {
  std::array<std::uint32_t, 10> coeffs{};

  std::uint32_t eval(const PrimeField& f, const Point4& p) const noexcept;
  Point4 gradient(const PrimeField& f, const Point4& p) const noexcept;
};

/// xw - yz.
QuadricForm segre_quadric(const PrimeField& f);

/// A point of D in the affine Segre chart t = v = 1: pt = (s u, s, u, 1).
/// For general-position geometry s and u are unused.
struct CurvePoint {
  Point4 pt{};
  std::uint32_t s = 0;
  std::uint32_t u = 0;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct GeometrySetup {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  Mode mode = Mode::OnAnticanonical;
  QuadricForm fixed;   ///< xw - yz
  QuadricForm second;  ///< Q'; unused in general-position mode
  std::vector<CurvePoint> points;
  std::mt19937_64 rng;  ///< continues the sampling stream for further points

  bool on_curve() const noexcept { return mode == Mode::OnAnticanonical; }
};

/// Coefficients (C, B, A) of Q'(s u, s, u, 1) = A u^2 + B u + C.
std::array<std::uint32_t, 3> curve_u_coeffs(const QuadricForm& q, std::uint32_t s,
                                            const PrimeField& f) noexcept;

/// Q' pulled back along the Segre chart, evaluated at (s, u).
std::uint32_t curve_equation(const QuadricForm& q, std::uint32_t s, std::uint32_t u,
                             const PrimeField& f) noexcept;

/// Draws Q' from the seed. No points yet.
GeometrySetup begin_geometry(const PrimeField& f, std::uint64_t seed, Mode mode);

/// Source of the s-coordinate for curve sampling; defaults to uniform draws.
using SDraw = std::function<std::uint32_t(std::mt19937_64&)>;

/// Appends r distinct points: smooth points of D in on-anticanonical mode,
/// uniform points of P^3 otherwise. Throws std::runtime_error if no valid
/// point turns up within a bounded number of attempts.
void sample_points(GeometrySetup& g, std::size_t r, const PrimeField& f, SDraw draw = {});

/// One random point of D (or of P^3 in general-position mode) distinct from
/// every sampled P_i, drawn from `rng`.
CurvePoint random_curve_point(const GeometrySetup& g, const PrimeField& f, std::mt19937_64& rng);
Point4 random_space_point(const PrimeField& f, std::mt19937_64& rng);

/// Jacobian of (xw - yz, Q') has rank 2 at p.
bool is_smooth_on_curve(const GeometrySetup& g, const PrimeField& f, const Point4& p);

/// A tangent vector to D at p, not proportional to p.
std::optional<Point4> curve_tangent(const GeometrySetup& g, const PrimeField& f, const Point4& p);

/// p and q span the same projective point.
bool same_projective_point(const PrimeField& f, const Point4& p, const Point4& q);

}  // namespace fatlin
