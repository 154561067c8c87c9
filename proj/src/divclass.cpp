#include "fatlin/divclass.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace fatlin {

std::int64_t binom3(std::int64_t n) noexcept {
  if (n < 3) return 0;
  return n * (n - 1) * (n - 2) / 6;
}

Mults sorted_desc(Mults m) {
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

ThreefoldClass normalized(ThreefoldClass c, bool drop_zeros) {
  c.mults = sorted_desc(std::move(c.mults));
  if (drop_zeros) std::erase(c.mults, 0);
  return c;
}

std::int64_t mult_sum(const Mults& m) noexcept {
  return std::accumulate(m.begin(), m.end(), std::int64_t{0});
}

std::int64_t condition_count(const ThreefoldClass& c) {
  std::int64_t total = 0;
  for (int m : c.mults) total += binom3(static_cast<std::int64_t>(m) + 2);
  return total;
}

std::int64_t vdim3(const ThreefoldClass& c) {
  if (c.d < -3) {
    throw std::invalid_argument("vdim3: degree " + std::to_string(c.d) + " is below -3");
  }
  return binom3(static_cast<std::int64_t>(c.d) + 3) - condition_count(c) - 1;
}

std::int64_t edim3(const ThreefoldClass& c) { return std::max<std::int64_t>(-1, vdim3(c)); }

std::int64_t vdim2(const PlaneClass& c) noexcept {
  std::int64_t d = c.d;
  std::int64_t v = d * (d + 3) / 2;
  for (std::int64_t m : c.mults) v -= m * (m + 1) / 2;
  return v;
}

std::int64_t vdim_quadric(const QuadricClass& c) noexcept {
  std::int64_t v = (static_cast<std::int64_t>(c.a) + 1) * (static_cast<std::int64_t>(c.b) + 1) - 1;
  for (std::int64_t m : c.mults) v -= m * (m + 1) / 2;
  return v;
}

namespace {

std::int64_t exceptional_pairing(const Mults& x, const Mults& y) noexcept {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    s -= static_cast<std::int64_t>(x[i]) * y[i];
  }
  return s;
}

}  // namespace

std::int64_t pair(const QuadricClass& x, const QuadricClass& y) noexcept {
  return static_cast<std::int64_t>(x.a) * y.b + static_cast<std::int64_t>(x.b) * y.a +
         exceptional_pairing(x.mults, y.mults);
}

std::int64_t pair(const PlaneClass& x, const PlaneClass& y) noexcept {
  return static_cast<std::int64_t>(x.d) * y.d + exceptional_pairing(x.mults, y.mults);
}

QuadricClass canonical_quadric(std::size_t r) { return {-2, -2, Mults(r, -1)}; }

PlaneClass canonical_plane(std::size_t s) { return {-3, Mults(s, -1)}; }

std::int64_t k_intersection(const QuadricClass& c) {
  return pair(c, canonical_quadric(c.mults.size()));
}

std::int64_t k_intersection(const PlaneClass& c) {
  return pair(c, canonical_plane(c.mults.size()));
}

QuadricClass restrict_to_quadric(const ThreefoldClass& c) { return {c.d, c.d, c.mults}; }

ThreefoldClass residual(const ThreefoldClass& c, ResidualKind kind) {
  ThreefoldClass out{c.d - 2, c.mults};
  for (int& m : out.mults) {
    m -= 1;
    if (kind == ResidualKind::Effective && m < 0) m = 0;
  }
  return out;
}

PlaneClass quadric_to_plane(const QuadricClass& c) {
  Mults m = sorted_desc(c.mults);
  const int m1 = m.empty() ? 0 : m.front();
  PlaneClass out{c.a + c.b - m1, {c.a - m1, c.b - m1}};
  if (!m.empty()) out.mults.insert(out.mults.end(), m.begin() + 1, m.end());
  return out;
}

bool is_standard_form(const PlaneClass& c) {
  Mults m = sorted_desc(c.mults);
  if (!m.empty() && m.back() < 0) return false;
  while (m.size() < 3) m.push_back(0);
  return static_cast<std::int64_t>(c.d) >= static_cast<std::int64_t>(m[0]) + m[1] + m[2];
}

Reduction cremona_reduce(const PlaneClass& c) {
  // (mult, original label); kept sorted by mult descending, ties by label.
  std::vector<std::pair<int, std::size_t>> labelled;
  for (std::size_t i = 0; i < c.mults.size(); ++i) labelled.emplace_back(c.mults[i], i);
  auto sort_labelled = [&] {
    std::stable_sort(labelled.begin(), labelled.end(),
                     [](const auto& x, const auto& y) { return x.first > y.first; });
  };
  auto current = [&](int d) {
    PlaneClass pc{d, {}};
    for (const auto& [m, label] : labelled) pc.mults.push_back(m);
    return pc;
  };

  Reduction out;
  int d = c.d;
  for (;;) {
    sort_labelled();
    if (d < 0) {
      out.log.status = ReductionStatus::NotStandard;
      out.log.reason = "negative degree";
      break;
    }
    std::int64_t top = 0;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, labelled.size()); ++i) {
      top += labelled[i].first;
    }
    if (d >= top) {
      if (!labelled.empty() && labelled.back().first < 0) {
        out.log.status = ReductionStatus::NotStandard;
        out.log.reason = "negative multiplicity";
      }
      break;
    }
    if (labelled.size() < 3) {
      out.log.status = ReductionStatus::NotStandard;
      out.log.reason = "fewer than three exceptional classes";
      break;
    }
    CremonaStep step;
    step.before = current(d);
    const int excess = static_cast<int>(top) - d;  // m1+m2+m3-d > 0
    for (std::size_t i = 0; i < 3; ++i) {
      step.indices[i] = labelled[i].second;
      labelled[i].first -= excess;
    }
    d -= excess;
    sort_labelled();
    step.after = current(d);
    out.log.steps.push_back(std::move(step));
  }
  out.result = current(d);
  return out;
}

}  // namespace fatlin
