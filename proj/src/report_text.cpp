#include <map>
#include <sstream>

#include "fatlin/class_text.hpp"
#include "fatlin/report.hpp"

namespace fatlin {

namespace {

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

void conditions(std::ostringstream& os, const std::vector<Condition>& cs) {
  for (const auto& c : cs) {
    os << "  " << c.label << ' ' << c.text;
    if (c.applies) os << ' ' << mark(c.holds);
    os << '\n';
  }
}

void sides(std::ostringstream& os, const std::vector<SideCheck>& cs, const char* indent) {
  for (const auto& s : cs) os << indent << mark(s.holds) << ' ' << s.name << "  " << to_string(s.cls) << '\n';
}

// name -> (trials in which it fired, first witness)
using FireTable = std::map<std::string, std::pair<int, std::string>>;

FireTable fired(const OracleReport& r, bool base) {
  FireTable t;
  for (const auto& run : r.runs) {
    for (const auto& p : base ? run.base : run.separation) {
      if (p.fired == 0) continue;
      auto& e = t[p.name];
      if (e.first++ == 0) e.second = p.witness;
    }
  }
  return t;
}

}  // namespace

std::string render_text(const Classification& c) {
  std::ostringstream os;
  os << to_string(c.tested) << "  [" << to_string(c.mode) << "]\n";
  os << "nonspecial: " << to_string(c.nonspecial.value) << "  (" << c.nonspecial.reason << ")\n";
  conditions(os, c.nonspecial.conditions);
  os << "base point free: " << (c.bpf.value ? "true" : "false")
     << (c.bpf.exact ? "" : "  (sufficient only)") << '\n';
  conditions(os, c.bpf.conditions);
  os << "very ample: " << (c.very_ample.value ? "true" : "false")
     << (c.very_ample.exact ? "" : "  (sufficient only)") << '\n';
  conditions(os, c.very_ample.conditions);
  for (const auto& w : c.warnings) os << "warning: " << w << '\n';
  return os.str();
}

std::string render_text(const Certificate& c) {
  std::ostringstream os;
  os << "certificate " << to_string(c.goal) << " for " << to_string(c.start) << ": "
     << (c.succeeded() ? "succeeded" : "FAILED") << '\n';
  if (!c.preliminary.empty()) {
    os << "preliminary:\n";
    sides(os, c.preliminary, "  ");
  }
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& s = c.steps[i];
    os << "step " << i + 1 << "  " << to_string(s.current) << "  [" << s.branch << "]\n";
    os << "  restricted " << to_string(s.surface.cls) << "  c·K=" << s.surface.k_intersection
       << "  need " << s.surface.threshold << (s.surface.standard ? "" : ", not standard") << "  "
       << mark(s.surface.holds) << '\n';
    if (!s.surface.reduction.log.steps.empty()) {
      os << "    reduces to " << to_string(s.surface.reduction.result) << " in "
         << s.surface.reduction.log.steps.size() << " Cremona moves\n";
    }
    os << "  residual " << to_string(s.residual) << '\n';
    sides(os, s.side_checks, "    ");
  }
  os << "terminal " << to_string(c.terminal) << "  (r'=" << c.terminal.mults.size() << ")";
  if (!c.terminal_rule.empty()) os << "  " << c.terminal_rule;
  os << "  " << mark(c.terminal_ok) << '\n';
  if (!c.succeeded()) {
    os << "failed at " << (c.failed_step == 0 ? std::string("preliminary/terminal check")
                                              : "step " + std::to_string(c.failed_step))
       << ": " << c.failure << '\n';
  }
  for (const auto& f : c.findings) os << "finding: " << f << '\n';
  return os.str();
}

std::string render_text(const OracleReport& r, const Agreement* agreement) {
  std::ostringstream os;
  os << "oracle " << to_string(r.tested) << "  [" << to_string(r.mode) << "]\n";
  os << "matrix " << r.rows << " x " << r.cols << ", rank " << r.rank << '\n';
  os << "vdim " << r.vdim << ", edim " << r.edim << ", dim " << r.dim << " (min over "
     << r.runs.size() << " trials, max " << r.dim_max << "), h1 " << r.h1
     << (r.special() ? ": special" : ": non-special") << '\n';
  if (r.probed) {
    os << "bpf evidence: " << (r.bpf_evidence ? "no base point found" : "base points found") << '\n';
    for (const auto& [name, e] : fired(r, true)) {
      os << "  " << name << " fired in " << e.first << " trial(s): " << e.second << '\n';
    }
    os << "va evidence: "
       << (r.va_evidence ? "every probe separated" : "some length-2 scheme not separated") << '\n';
    for (const auto& [name, e] : fired(r, false)) {
      os << "  " << name << " fired in " << e.first << " trial(s): " << e.second << '\n';
    }
  }
  for (const auto& b : r.breaches) os << "BREACH: " << b << '\n';
  if (agreement != nullptr) {
    os << "agreement: " << (agreement->all() ? "AGREE" : "DISAGREE") << '\n';
    for (const auto& n : agreement->notes) os << "  " << n << '\n';
  }
  return os.str();
}

}  // namespace fatlin
