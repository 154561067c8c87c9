#include <doctest.h>

#include <functional>

#include "fatlin/class_text.hpp"
#include "fatlin/criteria.hpp"

using namespace fatlin;

namespace {

ThreefoldClass L3(std::string_view s) { return parse_threefold(s); }

// Every normalized class in a box, mults in [1, mmax].
template <class F>
void for_each_class(int dmax, int rmax, int mmax, F&& fn) {
  Mults m;
  std::function<void(int, int, int)> rec = [&](int d, int r, int top) {
    if (static_cast<int>(m.size()) == r) {
      fn(ThreefoldClass{d, m});
      return;
    }
    for (int v = top; v >= 1; --v) {
      m.push_back(v);
      rec(d, r, v);
      m.pop_back();
    }
  };
  for (int d = 0; d <= dmax; ++d)
    for (int r = 0; r <= rmax; ++r) rec(d, r, mmax);
}

// Inequalities restated from scratch.
bool ref_bpf(int d, const Mults& m) {
  const auto at = [&](std::size_t i) { return i < m.size() ? m[i] : 0; };
  const long s = mult_sum(m);
  if (!m.empty() && m.back() < 0) return false;
  if (d < at(0) + at(1)) return false;
  if (m.size() >= kBpfSumMinPoints && 4L * d < s + 2) return false;
  return true;
}

bool ref_va(int d, const Mults& m) {
  const auto at = [&](std::size_t i) { return i < m.size() ? m[i] : 0; };
  const long s = mult_sum(m);
  if (!m.empty() && m.back() <= 0) return false;
  if (d < at(0) + at(1) + 1) return false;
  if (m.size() >= 9 && 4L * d < s + 3) return false;
  return true;
}

Tri ref_ns(int d, const Mults& m) {
  const auto at = [&](std::size_t i) { return i < m.size() ? m[i] : 0; };
  if (2 * d < at(0) + at(1) + at(2) + at(3)) return Tri::Unknown;
  if (d < at(0) + at(1) - 1) return Tri::Unknown;
  if (m.size() >= 9 && 4L * d < mult_sum(m)) return Tri::Unknown;
  return Tri::Yes;
}

}  // namespace

TEST_CASE("check_nonspecial examples") {
  CHECK(check_nonspecial(L3("L3(3; 2,1^5)")) == Tri::Yes);
  CHECK(check_nonspecial(L3("L3(2; 1^9)")) == Tri::Unknown);
  CHECK(check_nonspecial(L3("L3(0;)")) == Tri::Yes);
  CHECK(check_nonspecial(L3("L3(2; 1^8)")) == Tri::Yes);
  CHECK(check_nonspecial(L3("L3(2; 1^9, 0^3)")) == Tri::Unknown);
}

TEST_CASE("check_bpf examples") {
  CHECK(check_bpf(L3("L3(2; 1^6)")));
  CHECK_FALSE(check_bpf(L3("L3(2; 1^8)")));
  CHECK_FALSE(check_bpf(L3("L3(1; 2)")));
  CHECK(check_bpf(L3("L3(0;)")));
  CHECK_FALSE(check_bpf(L3("L3(2; 1^7)")));  // quadrics through 7 points of D share an eighth
}

TEST_CASE("check_very_ample examples") {
  CHECK(check_very_ample(L3("L3(3; 1^8)")));
  CHECK(check_very_ample(L3("L3(5; 2^5,1^7)")));
  CHECK_FALSE(check_very_ample(L3("L3(3; 2,2)")));
  CHECK_FALSE(check_very_ample(L3("L3(0;)")));
  CHECK(check_very_ample(L3("L3(1;)")));
}

TEST_CASE("verdict conditions are rendered evaluated") {
  const BoolVerdict v = very_ample_verdict(L3("L3(5; 2^5,1^7)"));
  REQUIRE(v.conditions.size() == 3);
  CHECK(v.conditions[2].text == "4d=20 ≥ Σm+3=20");
  CHECK(v.conditions[2].holds);
  const BoolVerdict w = very_ample_verdict(L3("L3(3; 2,2)"));
  CHECK_FALSE(w.conditions[1].holds);
}

TEST_CASE("classify normalizes and warns on kept zeros") {
  const Classification a = classify(L3("L3(3; 1,0,2)"));
  CHECK(a.tested == L3("L3(3; 2,1)"));
  const Classification b = classify(L3("L3(3; 1,0,2)"), Mode::OnAnticanonical, ZeroPolicy::Keep);
  CHECK(b.tested == L3("L3(3; 2,1,0)"));
  CHECK_FALSE(b.warnings.empty());
  CHECK_FALSE(b.very_ample.value);
  const Classification g = classify(L3("L3(5; 2^5,1^7)"), Mode::GeneralPosition);
  CHECK(g.very_ample.value);
  CHECK_FALSE(g.very_ample.exact);
}

TEST_CASE("surface predicate examples") {
  CHECK_FALSE(surface_predicate({3, Mults(10, 1)}, Goal::NS));
  CHECK(surface_predicate({4, Mults(10, 1)}, Goal::NS));
  CHECK(surface_predicate({2, {1, 1, 1}}, Goal::VA));
  // restricted image with 4d = sum(m) + 2 for L3(4; 2,1^12): L2(6; 2,2,1^12)
  const PlaneClass img{6, {2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};
  CHECK(k_intersection(img) == -2);
  CHECK(surface_predicate(img, Goal::BPF));
  const SurfaceCheck s = evaluate_surface_predicate({3, Mults(10, 1)}, Goal::NS);
  CHECK(s.k_intersection == 1);
  CHECK(s.standard);
}

TEST_CASE("certificate examples") {
  const Certificate va = build_certificate(L3("L3(5; 2^5,1^7)"), Goal::VA);
  REQUIRE(va.succeeded());
  REQUIRE_FALSE(va.steps.empty());
  CHECK(va.steps[0].branch.find("m_r = 1") != std::string::npos);
  CHECK(va.steps[0].residual == L3("L3(3; 1^5,0^7)"));
  CHECK(audit_certificate(va).empty());

  const Certificate empty = build_certificate(L3("L3(0;)"), Goal::NS);
  CHECK(empty.succeeded());
  CHECK(empty.steps.empty());
  CHECK(empty.terminal == L3("L3(0;)"));

  const Certificate bad = build_certificate(L3("L3(2; 1^9)"), Goal::NS);
  CHECK_FALSE(bad.succeeded());
  CHECK(bad.failed_step == 1);
  REQUIRE(bad.steps.size() == 1);
  CHECK(bad.steps[0].surface.cls == PlaneClass{3, Mults(10, 1)});
  CHECK(bad.steps[0].surface.k_intersection == 1);
  CHECK(audit_certificate(bad).empty());
}

TEST_CASE("audit catches a tampered certificate") {
  Certificate c = build_certificate(L3("L3(6; 2^4,1^10)"), Goal::NS);
  REQUIRE(c.succeeded());
  REQUIRE_FALSE(c.steps.empty());
  c.steps[0].residual.d += 1;
  CHECK_FALSE(audit_certificate(c).empty());
}

TEST_CASE("verdicts agree with independently restated inequalities") {
  for_each_class(10, 14, 4, [](const ThreefoldClass& c) {
    CAPTURE(to_string(c));
    CHECK(check_bpf(c) == ref_bpf(c.d, c.mults));
    CHECK(check_very_ample(c) == ref_va(c.d, c.mults));
    CHECK(check_nonspecial(c) == ref_ns(c.d, c.mults));
  });
}

TEST_CASE("verdicts are monotone in d and imply each other") {
  for_each_class(10, 14, 4, [](const ThreefoldClass& c) {
    CAPTURE(to_string(c));
    const ThreefoldClass up{c.d + 1, c.mults};
    if (check_bpf(c)) CHECK(check_bpf(up));
    if (check_very_ample(c)) {
      CHECK(check_very_ample(up));
      CHECK(check_bpf(c));
    }
    if (check_nonspecial(c) == Tri::Yes) CHECK(check_nonspecial(up) == Tri::Yes);
  });
}

TEST_CASE("certificates exist for every positive verdict and audit clean") {
  std::size_t built = 0;
  for_each_class(10, 14, 4, [&](const ThreefoldClass& c) {
    const bool want[3] = {check_nonspecial(c) == Tri::Yes, check_bpf(c), check_very_ample(c)};
    const Goal goals[3] = {Goal::NS, Goal::BPF, Goal::VA};
    for (int g = 0; g < 3; ++g) {
      if (!want[g]) continue;
      const Certificate cert = build_certificate(c, goals[g]);
      ++built;
      CAPTURE(to_string(c));
      CAPTURE(to_string(goals[g]));
      CHECK_MESSAGE(cert.succeeded(), cert.failure);
      CHECK(audit_certificate(cert).empty());
    }
  });
  CHECK(built > 10000);
}
