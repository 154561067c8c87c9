#include "fatlin/class_text.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace fatlin {

namespace {

constexpr long kMaxRepeat = 100000;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  AnyClass parse() {
    skip();
    if (!consume('L')) fail("expected 'L3', 'LQ' or 'L2'");
    AnyClass out;
    if (consume('3')) {
      ThreefoldClass c;
      expect('(');
      c.d = integer();
      expect(';');
      c.mults = mult_list();
      out = c;
    } else if (consume('Q')) {
      QuadricClass c;
      expect('(');
      c.a = integer();
      expect(',');
      c.b = integer();
      expect(';');
      c.mults = mult_list();
      out = c;
    } else if (consume('2')) {
      PlaneClass c;
      expect('(');
      c.d = integer();
      expect(';');
      c.mults = mult_list();
      out = c;
    } else {
      fail("expected '3', 'Q' or '2' after 'L'");
    }
    expect(')');
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool consume(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!consume(ch)) fail(std::string("expected '") + ch + "'");
  }
  bool at(char ch) {
    skip();
    return pos_ < s_.size() && s_[pos_] == ch;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  long number(bool allow_sign) {
    skip();
    const std::size_t start = pos_;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view tok = s_.substr(start, pos_ - start);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      pos_ = start;
      fail("expected an integer");
    }
    return v;
  }

  int integer() {
    const std::size_t start = pos_;
    long v = number(true);
    if (v < std::numeric_limits<int>::min() / 4 || v > std::numeric_limits<int>::max() / 4) {
      pos_ = start;
      fail("integer out of range");
    }
    return static_cast<int>(v);
  }

  Mults mult_list() {
    Mults out;
    if (at(')')) return out;
    for (;;) {
      int m = integer();
      long repeat = 1;
      if (consume('^')) {
        const std::size_t start = pos_;
        repeat = number(false);
        if (repeat < 1 || repeat > kMaxRepeat) {
          pos_ = start;
          fail("repeat count must be between 1 and " + std::to_string(kMaxRepeat));
        }
      }
      out.insert(out.end(), static_cast<std::size_t>(repeat), m);
      if (!consume(',')) break;
    }
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class T>
T parse_as(std::string_view text, const char* expected) {
  AnyClass c = Parser(text).parse();
  if (auto* v = std::get_if<T>(&c)) return *v;
  throw ParseError(std::string("expected a ") + expected + " class", 0);
}

std::string with_mults(std::string head, const Mults& m) {
  head += ';';
  if (!m.empty()) head += ' ' + format_mults(m);
  head += ')';
  return head;
}

}  // namespace

AnyClass parse_class(std::string_view text) { return Parser(text).parse(); }

ThreefoldClass parse_threefold(std::string_view text) {
  return parse_as<ThreefoldClass>(text, "L3");
}
PlaneClass parse_plane(std::string_view text) { return parse_as<PlaneClass>(text, "L2"); }
QuadricClass parse_quadric(std::string_view text) { return parse_as<QuadricClass>(text, "LQ"); }

std::string format_mults(const Mults& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(m[i]);
    if (j - i >= 2) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string to_string(const ThreefoldClass& c) {
  return with_mults("L3(" + std::to_string(c.d), c.mults);
}
std::string to_string(const QuadricClass& c) {
  return with_mults("LQ(" + std::to_string(c.a) + ',' + std::to_string(c.b), c.mults);
}
std::string to_string(const PlaneClass& c) {
  return with_mults("L2(" + std::to_string(c.d), c.mults);
}
std::string to_string(const AnyClass& c) {
  return std::visit([](const auto& v) { return to_string(v); }, c);
}

}  // namespace fatlin
