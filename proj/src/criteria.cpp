#include "fatlin/criteria.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fatlin/class_text.hpp"

namespace fatlin {

std::string_view to_string(Tri t) noexcept {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(Mode m) noexcept {
  return m == Mode::OnAnticanonical ? "on-anticanonical" : "general-position";
}

std::string_view to_string(Goal g) noexcept {
  switch (g) {
    case Goal::NS: return "ns";
    case Goal::BPF: return "bpf";
    case Goal::VA: return "va";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "on-anticanonical" || s == "anticanonical") return Mode::OnAnticanonical;
  if (s == "general-position" || s == "general") return Mode::GeneralPosition;
  return std::nullopt;
}

std::optional<Goal> parse_goal(std::string_view s) {
  if (s == "ns" || s == "NS") return Goal::NS;
  if (s == "bpf" || s == "BPF") return Goal::BPF;
  if (s == "va" || s == "VA") return Goal::VA;
  return std::nullopt;
}

namespace {

using i64 = std::int64_t;

i64 top(const Mults& sorted, std::size_t count) {
  i64 s = 0;
  for (std::size_t i = 0; i < std::min(count, sorted.size()); ++i) s += sorted[i];
  return s;
}

std::string ge(const std::string& lhs_name, i64 lhs, const std::string& rhs_name, i64 rhs) {
  return lhs_name + "=" + std::to_string(lhs) + " ≥ " + rhs_name + "=" + std::to_string(rhs);
}

Condition sum_condition(const std::string& label, i64 d, const Mults& m, int extra,
                        std::size_t min_points) {
  const std::string rhs = extra == 0 ? "Σm" : "Σm+" + std::to_string(extra);
  Condition c{label, ge("4d", 4 * d, rhs, mult_sum(m) + extra), true, true};
  if (m.size() < min_points) {
    c.applies = false;
    c.text += " (not required: r=" + std::to_string(m.size()) + " < " +
              std::to_string(min_points) + ")";
  } else {
    c.holds = 4 * d >= mult_sum(m) + extra;
  }
  return c;
}

bool all_hold(const std::vector<Condition>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Condition& c) { return c.holds; });
}

}  // namespace

NonspecialVerdict nonspecial_verdict(const ThreefoldClass& c) {
  const ThreefoldClass n = normalized(c, true);
  const Mults& m = n.mults;
  NonspecialVerdict v;
  if (!m.empty() && m.back() < 0) {
    v.value = Tri::Unknown;
    v.reason = "negative multiplicity; the criterion needs m_i >= 0";
    v.conditions.push_back({"(0)", "m_r=" + std::to_string(m.back()) + " ≥ 0", true, false});
    return v;
  }
  v.conditions.push_back(
      {"(H)", ge("2d", 2 * i64{n.d}, "m1+m2+m3+m4", top(m, 4)), true, 2 * i64{n.d} >= top(m, 4)});
  v.conditions.push_back(
      {"(1)", ge("d", n.d, "m1+m2-1", top(m, 2) - 1), true, i64{n.d} >= top(m, 2) - 1});
  v.conditions.push_back(sum_condition("(2)", n.d, m, 0, kNsSumMinPoints));

  if (all_hold(v.conditions)) {
    v.value = Tri::Yes;
    v.reason = "all conditions hold";
  } else if (!v.conditions[0].holds) {
    v.value = Tri::Unknown;
    v.reason = "hypothesis 2d ≥ m1+m2+m3+m4 fails; criterion does not apply";
  } else {
    v.value = Tri::Unknown;
    v.reason = "sufficient condition fails; speciality undecided";
  }
  return v;
}

BoolVerdict bpf_verdict(const ThreefoldClass& c, Mode mode) {
  const ThreefoldClass n = normalized(c, false);
  const Mults& m = n.mults;
  BoolVerdict v;
  v.exact = mode == Mode::OnAnticanonical;
  if (m.empty()) {
    v.conditions.push_back({"(1)", "m_r ≥ 0 (no points)", false, true});
  } else {
    v.conditions.push_back(
        {"(1)", "m_r=" + std::to_string(m.back()) + " ≥ 0", true, m.back() >= 0});
  }
  v.conditions.push_back({"(2)", ge("d", n.d, "m1+m2", top(m, 2)), true, i64{n.d} >= top(m, 2)});
  v.conditions.push_back(sum_condition("(3)", n.d, m, 2, kBpfSumMinPoints));
  v.value = all_hold(v.conditions);
  return v;
}

BoolVerdict very_ample_verdict(const ThreefoldClass& c, Mode mode) {
  const ThreefoldClass n = normalized(c, false);
  const Mults& m = n.mults;
  BoolVerdict v;
  v.exact = mode == Mode::OnAnticanonical;
  if (m.empty()) {
    v.conditions.push_back({"(1)", "m_r > 0 (no points)", false, true});
  } else {
    v.conditions.push_back(
        {"(1)", "m_r=" + std::to_string(m.back()) + " > 0", true, m.back() > 0});
  }
  // top(m, 2) already reduces to m1 for r = 1 and to 0 for r = 0.
  const std::string rhs = m.size() >= 2 ? "m1+m2+1" : (m.size() == 1 ? "m1+1" : "1");
  v.conditions.push_back(
      {"(2)", ge("d", n.d, rhs, top(m, 2) + 1), true, i64{n.d} >= top(m, 2) + 1});
  v.conditions.push_back(sum_condition("(3)", n.d, m, 3, kVaSumMinPoints));
  v.value = all_hold(v.conditions);
  return v;
}

Tri check_nonspecial(const ThreefoldClass& c) { return nonspecial_verdict(c).value; }
bool check_bpf(const ThreefoldClass& c) { return bpf_verdict(c).value; }
bool check_very_ample(const ThreefoldClass& c) { return very_ample_verdict(c).value; }

Classification classify(const ThreefoldClass& c, Mode mode, ZeroPolicy zeros) {
  Classification out;
  out.input = c;
  out.mode = mode;
  out.tested = normalized(c, zeros == ZeroPolicy::Drop);
  const bool has_zero = std::find(c.mults.begin(), c.mults.end(), 0) != c.mults.end();
  if (has_zero && zeros == ZeroPolicy::Keep) {
    out.warnings.push_back(
        "zero multiplicities kept: they count towards r in the bpf/va point thresholds");
  } else if (has_zero) {
    out.warnings.push_back("zero multiplicities dropped before testing");
  }
  if (c.mults != sorted_desc(c.mults)) {
    out.warnings.push_back("multiplicities re-sorted into non-increasing order");
  }
  out.nonspecial = nonspecial_verdict(out.tested);
  out.bpf = bpf_verdict(out.tested, mode);
  out.very_ample = very_ample_verdict(out.tested, mode);
  if (mode == Mode::GeneralPosition) {
    out.warnings.push_back(
        "general-position mode: bpf/very-ample verdicts are sufficient only; a false verdict "
        "is not a proof of failure");
  }
  return out;
}

SurfaceCheck evaluate_surface_predicate(const PlaneClass& c, Goal kind) {
  SurfaceCheck s;
  s.kind = kind;
  s.cls = c;
  s.reduction = cremona_reduce(c);
  s.standard = s.reduction.log.status == ReductionStatus::InStandardForm;
  s.k_intersection = k_intersection(c);
  bool meets = false;
  switch (kind) {
    case Goal::NS:
      s.threshold = "c·K ≤ 0";
      meets = s.k_intersection <= 0;
      break;
    case Goal::BPF:
      s.threshold = "c·K ≤ -2";
      meets = s.k_intersection <= -2;
      break;
    case Goal::VA:
      s.threshold = "c·(-K) ≥ 3";
      meets = -s.k_intersection >= 3;
      break;
  }
  s.holds = s.standard && meets;
  return s;
}

bool surface_predicate(const PlaneClass& c, Goal kind) {
  return evaluate_surface_predicate(c, kind).holds;
}

namespace {

PlaneClass restricted_plane(const ThreefoldClass& c) {
  return quadric_to_plane(restrict_to_quadric(c));
}

SideCheck ns_check(const ThreefoldClass& c, const std::string& name) {
  return {name, c, check_nonspecial(c) == Tri::Yes};
}

SideCheck bpf_check(const ThreefoldClass& c, const std::string& name) {
  return {name, c, check_bpf(c)};
}

void fail(Certificate& cert, std::size_t step, std::string why) {
  cert.status = CertificateStatus::Failed;
  cert.failed_step = step;
  cert.failure = std::move(why);
}

/// Shared loop: while `continue_while(r)`, restrict, test the surface
/// predicate, record side checks and pass on the residual.
template <class Continue, class Branch, class Sides>
bool run_steps(Certificate& cert, ThreefoldClass current, Continue continue_while, Branch branch,
               Sides side_checks) {
  while (continue_while(current.mults.size())) {
    CertificateStep step;
    step.current = current;
    const ResidualKind kind = branch(current, step.branch);
    step.surface = evaluate_surface_predicate(restricted_plane(current), cert.goal);
    step.residual = residual(current, kind);
    const ThreefoldClass next = normalized(step.residual, true);
    side_checks(next, step.side_checks);
    if (!step.surface.standard) {
      cert.findings.push_back("step " + std::to_string(cert.steps.size() + 1) + ": " +
                              to_string(step.surface.cls) + " not reduced to standard form (" +
                              step.surface.reduction.log.reason + ")");
    }
    const bool sides_ok = std::all_of(step.side_checks.begin(), step.side_checks.end(),
                                      [](const SideCheck& s) { return s.holds; });
    step.ok = step.surface.holds && sides_ok;
    cert.steps.push_back(step);
    if (!step.ok) {
      std::string why;
      if (!step.surface.holds) {
        why = "surface predicate " + step.surface.threshold + " fails for " +
              to_string(step.surface.cls) + " (c·K = " +
              std::to_string(step.surface.k_intersection) +
              (step.surface.standard ? ")" : ", not standard)");
      } else {
        for (const auto& s : step.side_checks) {
          if (!s.holds) {
            why = s.name + " fails for " + to_string(s.cls);
            break;
          }
        }
      }
      fail(cert, cert.steps.size(), why);
      cert.terminal = current;
      return false;
    }
    current = next;
  }
  cert.terminal = current;
  return true;
}

}  // namespace

Certificate build_certificate(const ThreefoldClass& c, Goal goal) {
  Certificate cert;
  cert.goal = goal;
  cert.input = c;
  cert.start = normalized(c, goal != Goal::VA);
  cert.status = CertificateStatus::Succeeded;
  const Mults& m = cert.start.mults;

  if (!m.empty() && m.back() < 0) {
    cert.terminal = cert.start;
    fail(cert, 0, "negative multiplicity m_r=" + std::to_string(m.back()));
    return cert;
  }

  auto plain = [](const ThreefoldClass&, std::string& branch) {
    branch = "quadric residual";
    return ResidualKind::Plain;
  };

  bool steps_ok = true;
  switch (goal) {
    case Goal::NS: {
      const bool hyp = 2 * std::int64_t{cert.start.d} >= top(m, 4);
      cert.preliminary.push_back({"hypothesis 2d ≥ m1+m2+m3+m4", cert.start, hyp});
      if (!hyp) {
        cert.terminal = cert.start;
        fail(cert, 0, "hypothesis 2d ≥ m1+m2+m3+m4 fails");
        return cert;
      }
      steps_ok = run_steps(
          cert, cert.start, [](std::size_t r) { return r > 8; }, plain,
          [](const ThreefoldClass&, std::vector<SideCheck>&) {});
      cert.terminal_rule = "r' ≤ 8: points general in P^3, non-speciality from the r ≤ 8 classification";
      if (steps_ok) cert.terminal_ok = check_nonspecial(cert.terminal) == Tri::Yes;
      break;
    }
    case Goal::BPF: {
      steps_ok = run_steps(
          cert, cert.start, [](std::size_t r) { return r >= 9; }, plain,
          [](const ThreefoldClass& next, std::vector<SideCheck>& sides) {
            sides.push_back(ns_check(next, "h^1(residual) = 0 [ns]"));
          });
      cert.terminal_rule = "r' ≤ 8: points general in P^3, base locus from the r ≤ 8 classification";
      if (steps_ok) cert.terminal_ok = check_bpf(cert.terminal);
      break;
    }
    case Goal::VA: {
      if (!m.empty() && m.back() == 0) {
        cert.terminal = cert.start;
        fail(cert, 0, "m_r = 0: L cannot separate on E_r");
        return cert;
      }
      std::set<Mults> seen;
      for (std::size_t i = 0; i < m.size(); ++i) {
        ThreefoldClass aug = cert.start;
        aug.mults[i] += 1;
        aug = normalized(aug, true);
        if (!seen.insert(aug.mults).second) continue;
        const std::string tag = "L(E_" + std::to_string(i + 1) + ")";
        cert.preliminary.push_back(ns_check(aug, "h^1(" + tag + ") = 0 [ns]"));
        cert.preliminary.push_back(bpf_check(aug, tag + " base point free [bpf]"));
      }
      for (const auto& s : cert.preliminary) {
        if (!s.holds) {
          cert.terminal = cert.start;
          fail(cert, 0, s.name + " fails for " + to_string(s.cls));
          return cert;
        }
      }
      steps_ok = run_steps(
          cert, cert.start, [](std::size_t r) { return r >= 3; },
          [](const ThreefoldClass& cur, std::string& branch) {
            if (cur.mults.back() == 1) {
              branch = "m_r = 1";
              return ResidualKind::Effective;
            }
            branch = "m_r > 1";
            return ResidualKind::Plain;
          },
          [](const ThreefoldClass& next, std::vector<SideCheck>& sides) {
            sides.push_back(ns_check(next, "h^1(residual) = 0 [ns]"));
            sides.push_back(bpf_check(next, "residual base point free [bpf]"));
          });
      cert.terminal_rule = "r' ≤ 2: separation away from the E_i is immediate";
      if (steps_ok) cert.terminal_ok = check_very_ample(cert.terminal);
      break;
    }
  }
  if (steps_ok && !cert.terminal_ok) {
    fail(cert, 0, "terminal class " + to_string(cert.terminal) + " does not satisfy the " +
                      std::string(to_string(goal)) + " conditions");
  }
  return cert;
}

std::vector<std::string> audit_certificate(const Certificate& cert) {
  std::vector<std::string> issues;
  auto note = [&](std::size_t i, const std::string& what) {
    issues.push_back("step " + std::to_string(i + 1) + ": " + what);
  };
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertificateStep& s = cert.steps[i];
    if (i == 0 && s.current != normalized(cert.start, true)) note(i, "does not start from the input");
    if (i > 0 && s.current != normalized(cert.steps[i - 1].residual, true)) {
      note(i, "class is not the residual of the previous step");
    }
    const ResidualKind kind = s.branch == "m_r = 1" ? ResidualKind::Effective : ResidualKind::Plain;
    if (s.residual != residual(s.current, kind)) note(i, "residual mismatch");
    if (s.surface.cls != restricted_plane(s.current)) note(i, "restricted class mismatch");
    if (s.surface.k_intersection != k_intersection(s.surface.cls)) note(i, "K-intersection mismatch");
    const ThreefoldClass& cur = s.current;
    if (s.surface.k_intersection != -4 * std::int64_t{cur.d} + mult_sum(cur.mults)) {
      note(i, "K-intersection differs from -4d + sum(m)");
    }
    for (const CremonaStep& mv : s.surface.reduction.log.steps) {
      if (pair(mv.before, mv.before) != pair(mv.after, mv.after)) {
        note(i, "Cremona move changes self-intersection");
      }
      if (k_intersection(mv.before) != k_intersection(mv.after)) {
        note(i, "Cremona move changes K-intersection");
      }
      if (vdim2(mv.before) != vdim2(mv.after)) note(i, "Cremona move changes vdim");
    }
  }
  if (!cert.steps.empty() && cert.succeeded() &&
      cert.terminal != normalized(cert.steps.back().residual, true)) {
    issues.push_back("terminal is not the last residual");
  }
  return issues;
}

}  // namespace fatlin
