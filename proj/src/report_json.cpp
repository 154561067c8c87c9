#include "fatlin/class_text.hpp"
#include "fatlin/report.hpp"

namespace fatlin {

using json = nlohmann::ordered_json;

namespace {

json conditions_json(const std::vector<Condition>& cs) {
  json out = json::array();
  for (const auto& c : cs) {
    out.push_back({{"label", c.label}, {"text", c.text}, {"applies", c.applies}, {"holds", c.holds}});
  }
  return out;
}

json side_json(const std::vector<SideCheck>& cs) {
  json out = json::array();
  for (const auto& s : cs) {
    out.push_back({{"name", s.name}, {"class", to_string(s.cls)}, {"holds", s.holds}});
  }
  return out;
}

json probes_json(const std::vector<ProbeResult>& ps) {
  json out = json::array();
  for (const auto& p : ps) {
    json j{{"name", p.name}, {"attempted", p.attempted}, {"fired", p.fired}};
    if (!p.witness.empty()) j["witness"] = p.witness;
    if (!p.note.empty()) j["note"] = p.note;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

json to_json(const Reduction& r) {
  json steps = json::array();
  for (const auto& s : r.log.steps) {
    steps.push_back({{"indices", s.indices}, {"before", to_string(s.before)},
                     {"after", to_string(s.after)}});
  }
  json out{{"result", to_string(r.result)},
           {"status", r.log.status == ReductionStatus::InStandardForm ? "standard" : "not-standard"},
           {"moves", std::move(steps)}};
  if (!r.log.reason.empty()) out["reason"] = r.log.reason;
  return out;
}

json to_json(const Classification& c) {
  return {{"schema", kReportSchema},
          {"kind", "classification"},
          {"input", to_string(c.input)},
          {"tested", to_string(c.tested)},
          {"mode", to_string(c.mode)},
          {"nonspecial",
           {{"value", to_string(c.nonspecial.value)},
            {"reason", c.nonspecial.reason},
            {"conditions", conditions_json(c.nonspecial.conditions)}}},
          {"bpf",
           {{"value", c.bpf.value},
            {"exact", c.bpf.exact},
            {"conditions", conditions_json(c.bpf.conditions)}}},
          {"very_ample",
           {{"value", c.very_ample.value},
            {"exact", c.very_ample.exact},
            {"conditions", conditions_json(c.very_ample.conditions)}}},
          {"warnings", c.warnings}};
}

json to_json(const Certificate& c) {
  json steps = json::array();
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& s = c.steps[i];
    steps.push_back({{"index", i + 1},
                     {"current", to_string(s.current)},
                     {"branch", s.branch},
                     {"restricted",
                      {{"class", to_string(s.surface.cls)},
                       {"predicate", to_string(s.surface.kind)},
                       {"k_intersection", s.surface.k_intersection},
                       {"threshold", s.surface.threshold},
                       {"standard", s.surface.standard},
                       {"holds", s.surface.holds},
                       {"reduction", to_json(s.surface.reduction)}}},
                     {"residual", to_string(s.residual)},
                     {"side_checks", side_json(s.side_checks)},
                     {"ok", s.ok}});
  }
  return {{"schema", kReportSchema},
          {"kind", "certificate"},
          {"goal", to_string(c.goal)},
          {"input", to_string(c.input)},
          {"start", to_string(c.start)},
          {"status", c.succeeded() ? "succeeded" : "failed"},
          {"failed_step", c.failed_step},
          {"failure", c.failure},
          {"preliminary", side_json(c.preliminary)},
          {"steps", std::move(steps)},
          {"terminal",
           {{"class", to_string(c.terminal)},
            {"points", c.terminal.mults.size()},
            {"rule", c.terminal_rule},
            {"ok", c.terminal_ok}}},
          {"findings", c.findings}};
}

json to_json(const OracleReport& r, const Agreement* agreement) {
  json runs = json::array();
  for (const auto& t : r.runs) {
    json j{{"prime", t.prime}, {"seed", t.seed}, {"rank", t.rank},
           {"h0", t.h0},       {"dim", t.dim},   {"h1", t.h1}};
    if (r.probed) {
      j["base_probes"] = probes_json(t.base);
      j["separation_probes"] = probes_json(t.separation);
    }
    runs.push_back(std::move(j));
  }
  json out{{"schema", kReportSchema},
           {"kind", "oracle"},
           {"input", to_string(r.input)},
           {"tested", to_string(r.tested)},
           {"mode", to_string(r.mode)},
           {"field", {{"primes", r.primes}, {"seed", r.seed}, {"trials", r.trials}, {"probes", r.probes}}},
           {"shape", {{"rows", r.rows}, {"cols", r.cols}}},
           {"vdim", r.vdim},
           {"edim", r.edim},
           {"rank", r.rank},
           {"h0", r.h0},
           {"dim", r.dim},
           {"h1", r.h1},
           {"special", r.special()},
           {"dim_min", r.dim_min},
           {"dim_max", r.dim_max},
           {"probed", r.probed}};
  if (r.probed) {
    out["bpf_evidence"] = r.bpf_evidence;
    out["va_evidence"] = r.va_evidence;
  }
  out["runs"] = std::move(runs);
  out["breaches"] = r.breaches;
  if (agreement != nullptr) {
    out["agreement"] = {{"nonspecial", agreement->nonspecial},
                        {"bpf", agreement->bpf},
                        {"very_ample", agreement->very_ample},
                        {"notes", agreement->notes}};
  }
  return out;
}

}  // namespace fatlin
