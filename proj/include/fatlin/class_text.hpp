#pragma once

// Text form of divisor classes:
//   L3(d; m1,...,mr)   LQ(a,b; m1,...,mr)   L2(d; m1,...,ms)
// Whitespace is ignored and `m^k` stands for k copies of m.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "fatlin/divclass.hpp"

namespace fatlin {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

using AnyClass = std::variant<ThreefoldClass, QuadricClass, PlaneClass>;

AnyClass parse_class(std::string_view text);
ThreefoldClass parse_threefold(std::string_view text);
PlaneClass parse_plane(std::string_view text);
QuadricClass parse_quadric(std::string_view text);

/// Comma-separated mults; runs of two or more equal values use `m^k`.
std::string format_mults(const Mults& m);

std::string to_string(const ThreefoldClass& c);
std::string to_string(const QuadricClass& c);
std::string to_string(const PlaneClass& c);
std::string to_string(const AnyClass& c);

}  // namespace fatlin
