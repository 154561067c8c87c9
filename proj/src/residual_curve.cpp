#include "fatlin/residual_curve.hpp"

#include <algorithm>

#include "fatlin/linalg.hpp"

namespace fatlin {

ChartPoly restrict_to_chart(const MonomialBasis& basis, std::span<const std::uint32_t> section,
                            const PrimeField& f) {
  const auto n = static_cast<std::size_t>(basis.degree()) + 1;
  ChartPoly out(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (section[j] == 0) continue;
    // x = s u, y = s, z = u, w = 1
    const Exponent& e = basis[j];
    auto& slot = out[e[0] + e[1]][e[0] + e[2]];
    slot = f.add(slot, section[j]);
  }
  return out;
}

UniPoly chart_fibre(const ChartPoly& poly, std::uint32_t s0, const PrimeField& f) {
  const std::size_t n = poly.size();
  UniPoly out(n, 0);
  std::uint32_t sp = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (poly[i][j] != 0) out[j] = f.add(out[j], f.mul(poly[i][j], sp));
    }
    sp = f.mul(sp, s0);
  }
  return out;
}

namespace {

std::uint32_t sylvester(const std::array<std::uint32_t, 3>& a, const UniPoly& b,
                        const PrimeField& f) {
  const std::size_t d = b.size() - 1;
  const std::size_t n = d + 2;
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < 3; ++k) rows[i][i + k] = a[2 - k];
  }
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k <= d; ++k) rows[d + i][i + k] = b[d - k];
  }
  return determinant(std::move(rows), f);
}

}  // namespace

UniPoly curve_resultant(const GeometrySetup& g, const ChartPoly& poly, const PrimeField& f) {
  const std::size_t d = poly.size() - 1;
  const std::size_t samples = 4 * d + 1;
  std::vector<std::uint32_t> xs(samples), ys(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    xs[i] = static_cast<std::uint32_t>(i + 1);
    ys[i] = sylvester(curve_u_coeffs(g.second, xs[i], f), chart_fibre(poly, xs[i], f), f);
  }
  return interpolate(xs, ys, f);
}

ResidualPoints residual_points_on_curve(const GeometrySetup& g, std::span<const int> mults,
                                        const MonomialBasis& basis,
                                        std::span<const std::uint32_t> section,
                                        const PrimeField& f, const CurvePoint* known) {
  ResidualPoints out;
  const ChartPoly poly = restrict_to_chart(basis, section, f);
  UniPoly res = curve_resultant(g, poly, f);
  if (res.empty()) {
    out.note = "section vanishes on D";
    return out;
  }
  auto strip = [&](std::uint32_t s, int times) {
    for (int k = 0; k < times; ++k) {
      if (divide_by_linear(res, s, f) != 0) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < mults.size() && i < g.points.size(); ++i) {
    if (!strip(g.points[i].s, mults[i])) {
      out.note = "resultant not divisible at P" + std::to_string(i + 1);
      return out;
    }
  }
  if (known != nullptr && !strip(known->s, 1)) {
    out.note = "resultant not divisible at the chosen point";
    return out;
  }
  out.degree = degree(res);
  if (out.degree <= 0) {
    out.evaluated = true;
    return out;
  }
  auto roots = small_degree_roots(res, f);
  if (!roots) {
    out.note = "residual degree " + std::to_string(out.degree) + " not evaluated";
    return out;
  }
  out.evaluated = true;
  std::sort(roots->begin(), roots->end());
  roots->erase(std::unique(roots->begin(), roots->end()), roots->end());
  for (std::uint32_t s : *roots) {
    const auto gq = curve_u_coeffs(g.second, s, f);
    UniPoly gu(gq.begin(), gq.end());
    UniPoly common = gcd(gu, chart_fibre(poly, s, f), f);
    auto us = small_degree_roots(common, f);
    if (!us) {
      if (degree(common) <= 0) out.note = "residual point outside the chart";
      continue;
    }
    for (std::uint32_t u : *us) {
      CurvePoint cp{{f.mul(s, u), s, u, 1}, s, u};
      bool is_known = false;
      for (std::size_t i = 0; i < mults.size() && i < g.points.size(); ++i) {
        if (mults[i] > 0 && g.points[i] == cp) is_known = true;
      }
      if (!is_known && std::find(out.points.begin(), out.points.end(), cp) == out.points.end()) {
        out.points.push_back(cp);
      }
    }
  }
  return out;
}

}  // namespace fatlin
