#include <doctest.h>

#include <algorithm>
#include <random>

#include "fatlin/divclass.hpp"

using namespace fatlin;

namespace {

Mults rep(int m, int k) { return Mults(static_cast<std::size_t>(k), m); }

Mults cat(Mults a, const Mults& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Independent evaluations straight from the binomial formulas.
std::int64_t c3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::int64_t plane_self(const PlaneClass& c) {
  std::int64_t s = std::int64_t{c.d} * c.d;
  for (int m : c.mults) s -= std::int64_t{m} * m;
  return s;
}

std::int64_t plane_k(const PlaneClass& c) {
  std::int64_t s = -3 * std::int64_t{c.d};
  for (int m : c.mults) s += m;
  return s;
}

}  // namespace

TEST_CASE("vdim3 examples") {
  CHECK(vdim3({1, {}}) == 3);
  CHECK(vdim3({2, rep(1, 9)}) == 0);
  CHECK(vdim3({3, {2, 1, 1, 1, 1, 1}}) == 10);
  CHECK(vdim3({2, rep(1, 12)}) == -3);
  CHECK(edim3({2, rep(1, 12)}) == -1);
  CHECK(edim3({3, {2}}) == 15);
  CHECK(condition_count({4, {3, 2, 1}}) == 10 + 4 + 1);
  CHECK_THROWS_AS(vdim3({-4, {}}), std::invalid_argument);
}

TEST_CASE("vdim3 matches the binomial formula") {
  for (int d = 0; d <= 12; ++d) {
    for (int a = 0; a <= 5; ++a) {
      for (int b = 0; b <= a; ++b) {
        const ThreefoldClass c{d, {a, b, 1}};
        CHECK(vdim3(c) == c3(d + 3) - c3(a + 2) - c3(b + 2) - c3(3) - 1);
      }
    }
  }
}

TEST_CASE("vdim2 and quadric vdim examples") {
  CHECK(vdim2({3, rep(1, 10)}) == -1);
  CHECK(vdim2({0, {}}) == 0);
  CHECK(vdim2({3, {1, 1}}) == 7);
  CHECK(vdim_quadric({2, 2, {1}}) == 7);
  CHECK(vdim_quadric({1, 0, {}}) == 1);
}

TEST_CASE("pairings") {
  const PlaneClass ak{3, {1, 1}};
  CHECK(pair(ak, ak) == 7);
  CHECK(pair(QuadricClass{1, 0, {}}, QuadricClass{0, 1, {}}) == 1);
  CHECK(pair(QuadricClass{1, 0, {}}, QuadricClass{1, 0, {}}) == 0);
  CHECK(k_intersection(QuadricClass{2, 2, {1}}) == -7);
  CHECK(canonical_plane(2) == PlaneClass{-3, {-1, -1}});
  CHECK(canonical_quadric(1) == QuadricClass{-2, -2, {-1}});
  // restricted-then-blown-down class against K: -4d + sum m
  for (int d = 1; d <= 9; ++d) {
    const Mults m{d, 2, 1, 1};
    const PlaneClass img = quadric_to_plane(restrict_to_quadric({d, m}));
    CHECK(k_intersection(img) == -4 * d + mult_sum(m));
  }
}

TEST_CASE("pairing is symmetric and bilinear") {
  std::mt19937_64 rng(41);
  auto rnd = [&](std::size_t n) {
    PlaneClass c{static_cast<int>(rng() % 19) - 9, {}};
    for (std::size_t i = 0; i < n; ++i) c.mults.push_back(static_cast<int>(rng() % 11) - 5);
    return c;
  };
  for (int t = 0; t < 300; ++t) {
    const PlaneClass x = rnd(rng() % 6), y = rnd(rng() % 6), z = rnd(6);
    CHECK(pair(x, y) == pair(y, x));
    PlaneClass sum{y.d + z.d, z.mults};
    for (std::size_t i = 0; i < y.mults.size(); ++i) sum.mults[i] += y.mults[i];
    CHECK(pair(x, sum) == pair(x, y) + pair(x, z));
  }
}

TEST_CASE("restriction, residual and the quadric-plane dictionary") {
  CHECK(restrict_to_quadric({2, rep(1, 9)}) == QuadricClass{2, 2, rep(1, 9)});
  CHECK(restrict_to_quadric({0, {}}) == QuadricClass{0, 0, {}});
  CHECK(restrict_to_quadric({5, cat(rep(2, 5), rep(1, 7))}) ==
        QuadricClass{5, 5, cat(rep(2, 5), rep(1, 7))});
  CHECK(residual({2, rep(1, 9)}) == ThreefoldClass{0, rep(0, 9)});
  CHECK(residual({4, {}}) == ThreefoldClass{2, {}});
  CHECK(residual({5, cat(rep(2, 5), rep(1, 7))}) == ThreefoldClass{3, cat(rep(1, 5), rep(0, 7))});
  CHECK(residual({3, {2, 0}}) == ThreefoldClass{1, {1, -1}});
  CHECK(residual({3, {2, 0}}, ResidualKind::Effective) == ThreefoldClass{1, {1, 0}});
  CHECK(quadric_to_plane({2, 2, {1}}) == PlaneClass{3, {1, 1}});
  CHECK(quadric_to_plane({1, 1, {0}}) == PlaneClass{2, {1, 1}});
  CHECK(quadric_to_plane({4, 4, {1, 3, 2}}) == PlaneClass{5, {1, 1, 2, 1}});
  CHECK(quadric_to_plane({2, 3, {}}) == PlaneClass{5, {2, 3}});
}

TEST_CASE("quadric_to_plane preserves the intersection form and K") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 500; ++t) {
    QuadricClass q{static_cast<int>(rng() % 9), static_cast<int>(rng() % 9), {}};
    const std::size_t n = 1 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) q.mults.push_back(static_cast<int>(rng() % 6));
    std::sort(q.mults.rbegin(), q.mults.rend());
    const PlaneClass p = quadric_to_plane(q);
    CHECK(plane_self(p) == pair(q, q));
    CHECK(plane_k(p) == k_intersection(q));
    CHECK(vdim2(p) == vdim_quadric(q));
  }
}

TEST_CASE("standard form") {
  CHECK(is_standard_form({3, rep(1, 10)}));
  CHECK_FALSE(is_standard_form({2, {1, 1, 1}}));
  CHECK_FALSE(is_standard_form({5, {2, -1}}));
  CHECK(is_standard_form({0, {}}));
  CHECK(is_standard_form({2, {2}}));
}

TEST_CASE("Cremona reduction examples") {
  auto a = cremona_reduce({3, rep(1, 10)});
  CHECK(a.result == PlaneClass{3, rep(1, 10)});
  CHECK(a.log.steps.empty());
  CHECK(a.log.status == ReductionStatus::InStandardForm);

  auto b = cremona_reduce({2, {1, 1, 1}});
  CHECK(b.result == PlaneClass{1, {0, 0, 0}});
  CHECK(b.log.steps.size() == 1);
  CHECK(b.log.status == ReductionStatus::InStandardForm);

  auto c = cremona_reduce({5, {3, 3, 3}});
  CHECK(c.log.status == ReductionStatus::NotStandard);
  CHECK_FALSE(c.log.reason.empty());
}

TEST_CASE("every Cremona move preserves self-intersection, K and vdim") {
  for (int d = 0; d <= 12; ++d) {
    for (int a = 0; a <= 7; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= b; ++c)
          for (int e = 0; e <= c; ++e) {
            const PlaneClass start{d, {a, b, c, e, 1}};
            const Reduction red = cremona_reduce(start);
            PlaneClass prev = start;
            for (const auto& s : red.log.steps) {
              CHECK(plane_self(s.before) == plane_self(s.after));
              CHECK(plane_k(s.before) == plane_k(s.after));
              CHECK(vdim2(s.before) == vdim2(s.after));
              CHECK(s.after.d < s.before.d);
              CHECK(plane_self(s.before) == plane_self(prev));
              prev = s.after;
            }
            CHECK(plane_self(red.result) == plane_self(start));
            CHECK(plane_k(red.result) == plane_k(start));
            if (red.log.status == ReductionStatus::InStandardForm) {
              CHECK(is_standard_form(red.result));
            }
            CHECK(std::is_sorted(red.result.mults.rbegin(), red.result.mults.rend()));
          }
  }
}

TEST_CASE("Euler characteristic is additive along the quadric sequence") {
  for (int d = 0; d <= 12; ++d) {
    for (int r = 0; r <= 6; ++r) {
      for (int top = 1; top <= 5; ++top) {
        Mults m = rep(1, r);
        if (r > 0) m[0] = top;
        const ThreefoldClass c{d, m};
        const PlaneClass img = quadric_to_plane(restrict_to_quadric(c));
        CHECK(vdim3(c) + 1 == (vdim3(residual(c)) + 1) + (vdim2(img) + 1));
      }
    }
  }
}

TEST_CASE("normalization") {
  CHECK(normalized({3, {1, 0, 2}}) == ThreefoldClass{3, {2, 1}});
  CHECK(normalized({3, {1, 0, 2}}, false) == ThreefoldClass{3, {2, 1, 0}});
  CHECK(sorted_desc({1, 3, 2}) == Mults{3, 2, 1});
  CHECK(binom3(2) == 0);
  CHECK(binom3(5) == 10);
}
