#include <doctest.h>

#include <random>

#include "fatlin/class_text.hpp"

using namespace fatlin;

TEST_CASE("parsing") {
  CHECK(parse_threefold("L3(5; 2^5,1^7)") ==
        ThreefoldClass{5, {2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1}});
  CHECK(parse_threefold("L3(0;)") == ThreefoldClass{0, {}});
  CHECK(parse_threefold("  L3 ( 2 ; 1 ^ 2 , 3 ) ") == ThreefoldClass{2, {1, 1, 3}});
  CHECK(parse_plane("L2(5; 2,-1)") == PlaneClass{5, {2, -1}});
  CHECK(parse_quadric("LQ(2,3; 1)") == QuadricClass{2, 3, {1}});
  CHECK(std::holds_alternative<PlaneClass>(parse_class("L2(1;)")));
  CHECK(std::holds_alternative<QuadricClass>(parse_class("LQ(1,1;)")));
}

TEST_CASE("formatting") {
  CHECK(to_string(ThreefoldClass{5, {2, 2, 1}}) == "L3(5; 2^2,1)");
  CHECK(to_string(ThreefoldClass{1, {}}) == "L3(1;)");
  CHECK(to_string(QuadricClass{2, 2, {1}}) == "LQ(2,2; 1)");
  CHECK(format_mults({3, 1, 1, 1, 0}) == "3,1^3,0");
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 500; ++t) {
    ThreefoldClass c{static_cast<int>(rng() % 13), {}};
    const std::size_t n = rng() % 9;
    for (std::size_t i = 0; i < n; ++i) c.mults.push_back(static_cast<int>(rng() % 7) - 1);
    CHECK(parse_threefold(to_string(c)) == c);
    const PlaneClass p{static_cast<int>(rng() % 9) - 2, c.mults};
    CHECK(parse_plane(to_string(p)) == p);
    const QuadricClass q{static_cast<int>(rng() % 5), static_cast<int>(rng() % 5), c.mults};
    CHECK(parse_quadric(to_string(q)) == q);
    CHECK(parse_class(to_string(AnyClass{q})) == AnyClass{q});
  }
}

TEST_CASE("errors carry a position") {
  auto pos = [](std::string_view s) -> long {
    try {
      (void)parse_class(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(pos("L3(2;1") >= 6);
  CHECK(pos("L4(2;1)") <= 1);
  CHECK(pos("L3(x;1)") == 3);
  CHECK(pos("L3(2;1^)") >= 7);
  CHECK(pos("L3(2;1) junk") >= 8);
  CHECK(pos("") == 0);
  CHECK_THROWS_AS(parse_threefold("L2(1;)"), ParseError);
  CHECK_THROWS_AS(parse_threefold("L3(99999999999;)"), ParseError);
}
