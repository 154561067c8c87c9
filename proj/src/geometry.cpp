#include "fatlin/geometry.hpp"

#include <stdexcept>
#include <string>

#include "fatlin/linalg.hpp"

namespace fatlin {

namespace {

constexpr int kMaxAttemptsPerPoint = 10000;

// (i, j) variable pairs of the ten quadratic monomials, graded-lex.
constexpr std::array<std::array<int, 2>, 10> kQuadMonomials{{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};

// Linear polynomial c0 + c1 u.
using Lin = std::array<std::uint32_t, 2>;

}  // namespace

std::uint32_t QuadricForm::eval(const PrimeField& f, const Point4& p) const noexcept {
  std::uint32_t acc = 0;
  for (std::size_t k = 0; k < 10; ++k) {
    auto [i, j] = kQuadMonomials[k];
    acc = f.add(acc, f.mul(coeffs[k], f.mul(p[i], p[j])));
  }
  return acc;
}

Point4 QuadricForm::gradient(const PrimeField& f, const Point4& p) const noexcept {
  Point4 g{};
  for (std::size_t k = 0; k < 10; ++k) {
    auto [i, j] = kQuadMonomials[k];
    if (i == j) {
      g[i] = f.add(g[i], f.mul(f.mul(2, coeffs[k]), p[i]));
    } else {
      g[i] = f.add(g[i], f.mul(coeffs[k], p[j]));
      g[j] = f.add(g[j], f.mul(coeffs[k], p[i]));
    }
  }
  return g;
}

QuadricForm segre_quadric(const PrimeField& f) {
  QuadricForm q;
  q.coeffs[3] = 1;           // xw
  q.coeffs[5] = f.neg(1);    // -yz
  return q;
}

std::array<std::uint32_t, 3> curve_u_coeffs(const QuadricForm& q, std::uint32_t s,
                                            const PrimeField& f) noexcept {
  // x = s u, y = s, z = u, w = 1 as linear polynomials in u.
  const std::array<Lin, 4> coord{{{0, s}, {s, 0}, {0, 1}, {1, 0}}};
  std::array<std::uint32_t, 3> out{};
  for (std::size_t k = 0; k < 10; ++k) {
    if (q.coeffs[k] == 0) continue;
    auto [i, j] = kQuadMonomials[k];
    const Lin& a = coord[i];
    const Lin& b = coord[j];
    out[0] = f.add(out[0], f.mul(q.coeffs[k], f.mul(a[0], b[0])));
    out[1] = f.add(out[1], f.mul(q.coeffs[k], f.add(f.mul(a[0], b[1]), f.mul(a[1], b[0]))));
    out[2] = f.add(out[2], f.mul(q.coeffs[k], f.mul(a[1], b[1])));
  }
  return out;
}

std::uint32_t curve_equation(const QuadricForm& q, std::uint32_t s, std::uint32_t u,
                             const PrimeField& f) noexcept {
  return q.eval(f, Point4{f.mul(s, u), s, u, 1});
}

GeometrySetup begin_geometry(const PrimeField& f, std::uint64_t seed, Mode mode) {
  GeometrySetup g;
  g.prime = f.prime();
  g.seed = seed;
  g.mode = mode;
  g.fixed = segre_quadric(f);
  g.rng.seed(mix_seed(seed ^ (static_cast<std::uint64_t>(f.prime()) << 32)));
  for (auto& c : g.second.coeffs) c = f.random(g.rng);
  return g;
}

Point4 random_space_point(const PrimeField& f, std::mt19937_64& rng) {
  for (;;) {
    Point4 p{f.random(rng), f.random(rng), f.random(rng), f.random(rng)};
    if (p != Point4{}) return p;
  }
}

bool same_projective_point(const PrimeField& f, const Point4& p, const Point4& q) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (f.mul(p[i], q[j]) != f.mul(p[j], q[i])) return false;
    }
  }
  return p != Point4{} && q != Point4{};
}

bool is_smooth_on_curve(const GeometrySetup& g, const PrimeField& f, const Point4& p) {
  std::vector<std::vector<std::uint32_t>> jac;
  for (const QuadricForm* q : {&g.fixed, &g.second}) {
    Point4 gr = q->gradient(f, p);
    jac.emplace_back(gr.begin(), gr.end());
  }
  return small_rank(jac, f) == 2;
}

std::optional<Point4> curve_tangent(const GeometrySetup& g, const PrimeField& f, const Point4& p) {
  // Kernel of the 2x4 Jacobian is 2-dimensional and contains p (Euler).
  ModMatrix jac(2, 4);
  const Point4 g1 = g.fixed.gradient(f, p);
  const Point4 g2 = g.second.gradient(f, p);
  for (int j = 0; j < 4; ++j) {
    jac(0, j) = g1[j];
    jac(1, j) = g2[j];
  }
  EchelonForm e = reduce_to_rref(jac, f, simd::scalar_kernels());
  if (e.rank != 2) return std::nullopt;
  ModMatrix ker = nullspace_from_rref(jac, e, f);
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Point4 v{ker(i, 0), ker(i, 1), ker(i, 2), ker(i, 3)};
    if (!same_projective_point(f, v, p)) return v;
  }
  return std::nullopt;
}

namespace {

bool distinct_from(const PrimeField& f, const std::vector<CurvePoint>& pts, const Point4& p) {
  for (const auto& q : pts) {
    if (same_projective_point(f, q.pt, p)) return false;
  }
  return true;
}

// One attempt at a point of D with the given s; nullopt if the fibre has no
// rational, simple, smooth point.
std::optional<CurvePoint> curve_point_at(const GeometrySetup& g, const PrimeField& f,
                                         std::uint32_t s, bool take_plus) {
  const auto [c, b, a] = curve_u_coeffs(g.second, s, f);
  if (a == 0) return std::nullopt;
  const std::uint32_t disc = f.sub(f.mul(b, b), f.mul(4, f.mul(a, c)));
  if (disc == 0) return std::nullopt;
  const auto root = f.sqrt(disc);
  if (!root) return std::nullopt;
  const std::uint32_t num = take_plus ? f.add(f.neg(b), *root) : f.sub(f.neg(b), *root);
  const std::uint32_t u = f.mul(num, f.inv(f.mul(2, a)));
  CurvePoint cp{{f.mul(s, u), s, u, 1}, s, u};
  if (!is_smooth_on_curve(g, f, cp.pt)) return std::nullopt;
  return cp;
}

}  // namespace

CurvePoint random_curve_point(const GeometrySetup& g, const PrimeField& f, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < kMaxAttemptsPerPoint; ++attempt) {
    if (!g.on_curve()) {
      Point4 p = random_space_point(f, rng);
      if (distinct_from(f, g.points, p)) return {p, 0, 0};
      continue;
    }
    const std::uint32_t s = f.random(rng);
    const bool plus = (rng() & 1) != 0;
    auto cp = curve_point_at(g, f, s, plus);
    if (cp && distinct_from(f, g.points, cp->pt)) return *cp;
  }
  throw std::runtime_error("random_curve_point: no valid point found for p=" +
                           std::to_string(f.prime()));
}

void sample_points(GeometrySetup& g, std::size_t r, const PrimeField& f, SDraw draw) {
  for (std::size_t n = 0; n < r; ++n) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttemptsPerPoint && !placed; ++attempt) {
      if (!g.on_curve()) {
        Point4 p = random_space_point(f, g.rng);
        if (distinct_from(f, g.points, p)) {
          g.points.push_back({p, 0, 0});
          placed = true;
        }
        continue;
      }
      const std::uint32_t s = draw ? draw(g.rng) : f.random(g.rng);
      const bool plus = (g.rng() & 1) != 0;
      auto cp = curve_point_at(g, f, s, plus);
      if (cp && distinct_from(f, g.points, cp->pt)) {
        g.points.push_back(*cp);
        placed = true;
      }
    }
    if (!placed) {
      throw std::runtime_error("sample_points: could not place point " + std::to_string(n + 1) +
                               " on the anticanonical curve (p=" + std::to_string(f.prime()) +
                               "); rotate the prime or seed");
    }
  }
}

}  // namespace fatlin
