#include <doctest.h>

#include <random>

#include "fatlin/divclass.hpp"
#include "fatlin/monomials.hpp"
#include "fatlin/unipoly.hpp"

using namespace fatlin;

TEST_CASE("monomial counts and graded-lex order") {
  for (int d = 0; d <= 12; ++d) {
    MonomialBasis b(d);
    CHECK(static_cast<std::int64_t>(b.size()) == binom3(d + 3));
    for (std::size_t j = 0; j < b.size(); ++j) {
      CHECK(b.index_of(b[j]) == j);
      if (j > 0) CHECK(b[j - 1] > b[j]);
    }
  }
  MonomialBasis two(2);
  CHECK(two[0] == Exponent{2, 0, 0, 0});
  CHECK(two[1] == Exponent{1, 1, 0, 0});
  CHECK(two[9] == Exponent{0, 0, 0, 2});
  CHECK_THROWS(two.index_of(Exponent{1, 0, 0, 0}));
}

TEST_CASE("derivatives agree with restriction to a line") {
  // For F of degree d, F(P + tV) = sum_k t^k/k! (V.grad)^k F(P). The t-coefficient
  // recovered by interpolation must equal the directional derivative, and a
  // first-order derivative_row along e_v must match direction e_v.
  PrimeField f(2147483647U);
  std::mt19937_64 rng(31);
  for (int d = 1; d <= 7; ++d) {
    MonomialBasis b(d);
    std::vector<std::uint32_t> coeff(b.size());
    for (auto& c : coeff) c = f.random(rng);
    Point4 p{f.random(rng), f.random(rng), f.random(rng), f.random(rng)};
    Point4 v{f.random(rng), f.random(rng), f.random(rng), f.random(rng)};
    std::vector<std::uint32_t> vals(b.size()), xs, ys;
    for (int i = 0; i <= d; ++i) {
      const auto t = static_cast<std::uint32_t>(i + 2);
      Point4 q;
      for (int k = 0; k < 4; ++k) q[k] = f.add(p[k], f.mul(t, v[k]));
      evaluate_monomials(b, f, q, vals);
      std::uint32_t s = 0;
      for (std::size_t j = 0; j < b.size(); ++j) s = f.add(s, f.mul(coeff[j], vals[j]));
      xs.push_back(t);
      ys.push_back(s);
    }
    const UniPoly line = interpolate(xs, ys, f);
    std::vector<std::uint32_t> dir(b.size());
    directional_derivative(b, f, p, v, dir);
    std::uint32_t dd = 0;
    for (std::size_t j = 0; j < b.size(); ++j) dd = f.add(dd, f.mul(coeff[j], dir[j]));
    CHECK(dd == (line.size() > 1 ? line[1] : 0));

    for (int axis = 0; axis < 4; ++axis) {
      Exponent alpha{0, 0, 0, 0};
      alpha[axis] = 1;
      Point4 e{0, 0, 0, 0};
      e[axis] = 1;
      std::vector<std::uint32_t> r1(b.size()), r2(b.size());
      derivative_row(b, f, p, alpha, r1);
      directional_derivative(b, f, p, e, r2);
      CHECK(r1 == r2);
    }
  }
}

TEST_CASE("second derivatives by hand") {
  PrimeField f(101);
  MonomialBasis b(3);
  const Point4 p{2, 3, 5, 7};
  std::vector<std::uint32_t> row(b.size());
  derivative_row(b, f, p, Exponent{2, 0, 0, 0}, row);
  CHECK(row[b.index_of({3, 0, 0, 0})] == 12);  // d2/dx2 x^3 = 6x
  CHECK(row[b.index_of({2, 1, 0, 0})] == 6);   // 2y
  CHECK(row[b.index_of({1, 1, 1, 0})] == 0);
  derivative_row(b, f, p, Exponent{0, 1, 0, 1}, row);
  CHECK(row[b.index_of({0, 1, 0, 2})] == 14);  // d2/dydw y w^2 = 2w
  CHECK(row[b.index_of({1, 1, 0, 1})] == 2);   // x
}
