#pragma once

// Divisor classes on the three ambient spaces: the blow-up X_r of P^3 at r
// points, the blown-up quadric Q_r, and the blown-up plane B_s.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fatlin {

using Mults = std::vector<int>;

/// d E_0 - sum m_i E_i on X_r, written L3(d; m_1, ..., m_r).
struct ThreefoldClass {
  int d = 0;
  Mults mults;
  friend bool operator==(const ThreefoldClass&, const ThreefoldClass&) = default;
};

/// a f_1 + b f_2 - sum m_i e_i on Q_r, written LQ(a,b; m_1, ..., m_r).
struct QuadricClass {
  int a = 0;
  int b = 0;
  Mults mults;
  friend bool operator==(const QuadricClass&, const QuadricClass&) = default;
};

/// d h - sum m_i e'_i on B_s, written L2(d; m_1, ..., m_s).
struct PlaneClass {
  int d = 0;
  Mults mults;
  friend bool operator==(const PlaneClass&, const PlaneClass&) = default;
};

/// C(n, 3) with C(n, 3) = 0 for n < 3.
std::int64_t binom3(std::int64_t n) noexcept;

Mults sorted_desc(Mults m);
/// Sorts mults non-increasing; with `drop_zeros`, zero mults are removed.
ThreefoldClass normalized(ThreefoldClass c, bool drop_zeros = true);
std::int64_t mult_sum(const Mults& m) noexcept;

/// C(d+3,3) - sum C(m_i+2,3) - 1. Throws std::invalid_argument for d < -3.
std::int64_t vdim3(const ThreefoldClass& c);
std::int64_t edim3(const ThreefoldClass& c);
/// Number of linear conditions imposed by the fat points, sum C(m_i+2,3).
std::int64_t condition_count(const ThreefoldClass& c);

/// d(d+3)/2 - sum m_i(m_i+1)/2.
std::int64_t vdim2(const PlaneClass& c) noexcept;
/// (a+1)(b+1) - sum m_i(m_i+1)/2 - 1.
std::int64_t vdim_quadric(const QuadricClass& c) noexcept;

/// Intersection pairings; shorter mult lists are padded with zeros.
std::int64_t pair(const QuadricClass& x, const QuadricClass& y) noexcept;
std::int64_t pair(const PlaneClass& x, const PlaneClass& y) noexcept;

QuadricClass canonical_quadric(std::size_t r);
PlaneClass canonical_plane(std::size_t s);

/// c . K on each surface.
std::int64_t k_intersection(const QuadricClass& c);
std::int64_t k_intersection(const PlaneClass& c);

/// L restricted to the strict transform of the quadric: LQ(d,d; m).
QuadricClass restrict_to_quadric(const ThreefoldClass& c);

enum class ResidualKind {
  Plain,      ///< L3(d-2; m_i - 1), mults may become negative
  Effective,  ///< negative mults clamped to 0
};

/// Kernel of the restriction to the quadric: L3(d-2; m_1-1, ..., m_r-1).
ThreefoldClass residual(const ThreefoldClass& c, ResidualKind kind = ResidualKind::Plain);

/// Blow down along the point of largest multiplicity:
/// LQ(a,b; m_1, ..., m_r) = L2(a+b-m_1; a-m_1, b-m_1, m_2, ..., m_r).
/// Mults are sorted first; with no mults m_1 is taken as 0.
PlaneClass quadric_to_plane(const QuadricClass& c);

/// d >= m_1+m_2+m_3 and all m_i >= 0 after sorting (missing mults count as 0).
bool is_standard_form(const PlaneClass& c);

struct CremonaStep {
  /// Positions of the three exceptional classes acted on, in the input's labels.
  std::array<std::size_t, 3> indices{};
  PlaneClass before;
  PlaneClass after;
};

enum class ReductionStatus { InStandardForm, NotStandard };

struct ReductionLog {
  std::vector<CremonaStep> steps;
  ReductionStatus status = ReductionStatus::InStandardForm;
  std::string reason;  ///< empty when in standard form
};

struct Reduction {
  /// Final class, mults sorted non-increasing.
  PlaneClass result;
  ReductionLog log;
};

/// Greedy quadratic-transformation reduction on the three largest mults.
/// Each move strictly lowers d, so the loop terminates.
Reduction cremona_reduce(const PlaneClass& c);

}  // namespace fatlin
