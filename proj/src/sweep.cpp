#include "fatlin/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fatlin/class_text.hpp"
#include "fatlin/report.hpp"

namespace fatlin {

std::string_view to_string(Engines e) noexcept {
  switch (e) {
    case Engines::Criteria: return "criteria";
    case Engines::Oracle: return "oracle";
    case Engines::Both: return "both";
  }
  return "?";
}

std::string_view to_string(Format f) noexcept {
  switch (f) {
    case Format::Text: return "text";
    case Format::Csv: return "csv";
    case Format::Json: return "json";
  }
  return "?";
}

std::optional<Engines> parse_engines(std::string_view s) {
  if (s == "criteria") return Engines::Criteria;
  if (s == "oracle") return Engines::Oracle;
  if (s == "both") return Engines::Both;
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

namespace {

void check_range(const Range& r, const char* name, int floor, int cap) {
  const std::string range = std::string(name) + " range " + std::to_string(r.lo) + ":" +
                            std::to_string(r.hi);
  if (r.lo > r.hi) throw std::invalid_argument(range + " is empty");
  if (r.lo < floor) {
    throw std::invalid_argument(range + " starts below " + std::to_string(floor));
  }
  if (r.hi > cap) throw std::invalid_argument(range + " exceeds the cap " + std::to_string(cap));
}

bool runs_criteria(Engines e) { return e != Engines::Oracle; }
bool runs_oracle(Engines e) { return e != Engines::Criteria; }

}  // namespace

void validate(const SweepSpec& spec) {
  check_range(spec.degrees, "degree", 0, kMaxSweepDegree);
  check_range(spec.points, "points", 0, kMaxSweepPoints);
  check_range(spec.mults, "multiplicity", 1, kMaxSweepMult);
  if (runs_oracle(spec.engines)) validate(spec.field);
}

std::vector<ThreefoldClass> enumerate_classes(const SweepSpec& spec) {
  std::vector<ThreefoldClass> out;
  Mults m;
  for (int d = spec.degrees.lo; d <= spec.degrees.hi; ++d) {
    for (int r = spec.points.lo; r <= spec.points.hi; ++r) {
      std::function<void(int)> rec = [&](int top) {
        if (static_cast<int>(m.size()) == r) {
          out.push_back({d, m});
          return;
        }
        for (int v = top; v >= spec.mults.lo; --v) {
          m.push_back(v);
          rec(v);
          m.pop_back();
        }
      };
      rec(spec.mults.hi);
    }
  }
  return out;
}

bool SweepRow::breach() const noexcept {
  return !certificates_ok || (oracle.has_value() && !oracle->breaches.empty());
}

int SweepResult::exit_code() const noexcept {
  if (breaches > 0) return 3;
  if (disagreements > 0) return 2;
  return 0;
}

SweepRow evaluate_row(const ThreefoldClass& c, const SweepSpec& spec, const Oracle* oracle) {
  SweepRow row;
  row.cls = c;
  row.vdim = vdim3(c);
  row.verdicts = classify(c, spec.field.mode);
  if (runs_criteria(spec.engines)) {
    const bool want[3] = {row.verdicts.nonspecial.value == Tri::Yes, row.verdicts.bpf.value,
                          row.verdicts.very_ample.value};
    const Goal goals[3] = {Goal::NS, Goal::BPF, Goal::VA};
    for (int g = 0; g < 3; ++g) {
      if (!want[g]) continue;
      Certificate cert = build_certificate(c, goals[g]);
      if (!cert.succeeded() || !audit_certificate(cert).empty()) row.certificates_ok = false;
      row.certificates.push_back(std::move(cert));
    }
  }
  if (oracle != nullptr) {
    row.oracle = oracle->run(c);
    row.agreement = compare(row.verdicts, *row.oracle);
  }
  return row;
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate(spec);
  SweepResult result;
  result.spec = spec;
  const auto classes = enumerate_classes(spec);
  std::optional<Oracle> oracle;
  if (runs_oracle(spec.engines)) oracle.emplace(spec.field, static_cast<std::size_t>(spec.points.hi));

  result.rows.resize(classes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < classes.size(); i = next++) {
      result.rows[i] = evaluate_row(classes[i], spec, oracle ? &*oracle : nullptr);
    }
  };
  unsigned n = spec.threads != 0 ? spec.threads : std::max(1U, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, classes.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& row : result.rows) {
    if (row.disagrees()) ++result.disagreements;
    if (row.breach()) ++result.breaches;
  }
  return result;
}

namespace {

std::string flag(const SweepRow& row) {
  if (row.breach()) return "BREACH";
  if (!row.oracle) return "-";
  return row.agreement.all() ? "AGREE" : "DISAGREE";
}

std::string cert_status(const SweepRow& row) {
  if (row.certificates.empty()) return "-";
  return row.certificates_ok ? "ok" : "FAILED";
}

std::string evidence(bool e) { return e ? "none" : "found"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string join_notes(const SweepRow& row) {
  std::string out;
  for (const auto& n : row.agreement.notes) out += (out.empty() ? "" : "; ") + n;
  if (row.oracle) {
    for (const auto& b : row.oracle->breaches) out += (out.empty() ? "" : "; ") + b;
  }
  for (const auto& c : row.certificates) {
    if (!c.succeeded()) {
      out += (out.empty() ? "" : "; ") + std::string(to_string(c.goal)) + " certificate: " + c.failure;
    }
  }
  return out;
}

std::string render_csv(const SweepResult& res) {
  std::ostringstream os;
  os << "class,d,r,vdim,nonspecial,bpf,very_ample,certificates,dim,dim_max,h1,base_points,"
        "separation_failures,flag,notes\n";
  for (const auto& row : res.rows) {
    os << csv_field(to_string(row.cls)) << ',' << row.cls.d << ',' << row.cls.mults.size() << ','
       << row.vdim << ',' << to_string(row.verdicts.nonspecial.value) << ','
       << (row.verdicts.bpf.value ? "true" : "false") << ','
       << (row.verdicts.very_ample.value ? "true" : "false") << ',' << cert_status(row) << ',';
    if (row.oracle) {
      os << row.oracle->dim << ',' << row.oracle->dim_max << ',' << row.oracle->h1 << ','
         << evidence(row.oracle->bpf_evidence) << ',' << evidence(row.oracle->va_evidence);
    } else {
      os << ",,,,";
    }
    os << ',' << flag(row) << ',' << csv_field(join_notes(row)) << '\n';
  }
  return os.str();
}

std::string render_json(const SweepResult& res) {
  using json = nlohmann::ordered_json;
  json rows = json::array();
  for (const auto& row : res.rows) {
    json j{{"class", to_string(row.cls)},
           {"vdim", row.vdim},
           {"nonspecial", to_string(row.verdicts.nonspecial.value)},
           {"bpf", row.verdicts.bpf.value},
           {"very_ample", row.verdicts.very_ample.value},
           {"certificates", cert_status(row)}};
    if (row.oracle) {
      j["oracle"] = {{"dim", row.oracle->dim},
                     {"dim_max", row.oracle->dim_max},
                     {"h1", row.oracle->h1},
                     {"bpf_evidence", row.oracle->bpf_evidence},
                     {"va_evidence", row.oracle->va_evidence}};
    }
    j["flag"] = flag(row);
    const std::string notes = join_notes(row);
    if (!notes.empty()) j["notes"] = notes;
    rows.push_back(std::move(j));
  }
  const SweepSpec& s = res.spec;
  json out{{"schema", kReportSchema},
           {"kind", "sweep"},
           {"spec",
            {{"degrees", {s.degrees.lo, s.degrees.hi}},
             {"points", {s.points.lo, s.points.hi}},
             {"mults", {s.mults.lo, s.mults.hi}},
             {"engines", to_string(s.engines)},
             {"mode", to_string(s.field.mode)},
             {"primes", s.field.primes},
             {"seed", s.field.seed},
             {"trials", s.field.trials},
             {"probes", s.field.probes}}},
           {"rows", std::move(rows)},
           {"summary",
            {{"classes", res.rows.size()},
             {"disagreements", res.disagreements},
             {"breaches", res.breaches}}}};
  return out.dump(2) + "\n";
}

std::string render_table(const SweepResult& res) {
  const bool with_oracle = runs_oracle(res.spec.engines);
  std::size_t width = 5;
  for (const auto& row : res.rows) width = std::max(width, to_string(row.cls).size());
  std::ostringstream os;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  os << pad("class", width) << "  vdim  ns       bpf    va     cert";
  if (with_oracle) os << "    dim  h1  base   sep    flag";
  os << '\n';
  for (const auto& row : res.rows) {
    os << pad(to_string(row.cls), width) << "  " << pad(std::to_string(row.vdim), 4) << "  "
       << pad(std::string(to_string(row.verdicts.nonspecial.value)), 7) << "  "
       << pad(row.verdicts.bpf.value ? "true" : "false", 5) << "  "
       << pad(row.verdicts.very_ample.value ? "true" : "false", 5) << "  "
       << pad(cert_status(row), 6);
    if (row.oracle) {
      os << "  " << pad(std::to_string(row.oracle->dim), 4) << ' '
         << pad(std::to_string(row.oracle->h1), 3) << ' '
         << pad(evidence(row.oracle->bpf_evidence), 5) << "  "
         << pad(evidence(row.oracle->va_evidence), 5) << "  " << flag(row);
    }
    os << '\n';
    if (row.disagrees() || row.breach()) os << "    " << join_notes(row) << '\n';
  }
  os << res.rows.size() << " classes, " << res.disagreements << " DISAGREE, " << res.breaches
     << " breaches\n";
  return os.str();
}

}  // namespace

std::string render(const SweepResult& result, Format format) {
  switch (format) {
    case Format::Csv: return render_csv(result);
    case Format::Json: return render_json(result);
    case Format::Text: break;
  }
  return render_table(result);
}

}  // namespace fatlin
