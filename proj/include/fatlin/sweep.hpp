#pragma once

// Parameter sweeps: every normalized class in a (d, r, m) box, classified by
// the criteria and cross-checked against the oracle.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fatlin/criteria.hpp"
#include "fatlin/oracle.hpp"

namespace fatlin {

enum class Engines { Criteria, Oracle, Both };
enum class Format { Text, Csv, Json };

std::string_view to_string(Engines e) noexcept;
std::string_view to_string(Format f) noexcept;
std::optional<Engines> parse_engines(std::string_view s);
std::optional<Format> parse_format(std::string_view s);

struct Range {
  int lo = 0;
  int hi = 0;
};

inline constexpr int kMaxSweepDegree = 12;
inline constexpr int kMaxSweepPoints = 16;
inline constexpr int kMaxSweepMult = 5;

struct SweepSpec {
  Range degrees{0, 3};
  Range points{0, 6};
  Range mults{1, 1};
  Engines engines = Engines::Both;
  Format format = Format::Text;
  FieldConfig field;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

/// Throws std::invalid_argument naming the offending range.
void validate(const SweepSpec& spec);

/// Classes L3(d; m_1 >= ... >= m_r) in the box, by d, then r, then mults in
/// lexicographically decreasing order.
std::vector<ThreefoldClass> enumerate_classes(const SweepSpec& spec);

struct SweepRow {
  ThreefoldClass cls;
  std::int64_t vdim = 0;
  Classification verdicts;
  /// Certificates for each goal whose verdict is Yes/true, in NS, BPF, VA order.
  std::vector<Certificate> certificates;
  bool certificates_ok = true;
  std::optional<OracleReport> oracle;
  Agreement agreement;

  bool disagrees() const noexcept { return oracle.has_value() && !agreement.all(); }
  bool breach() const noexcept;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  std::size_t disagreements = 0;
  std::size_t breaches = 0;

  /// 0 clean, 2 any DISAGREE row, 3 any certificate or oracle invariant breach.
  int exit_code() const noexcept;
};

SweepRow evaluate_row(const ThreefoldClass& c, const SweepSpec& spec, const Oracle* oracle);
SweepResult run_sweep(const SweepSpec& spec);

std::string render(const SweepResult& result, Format format);

}  // namespace fatlin
