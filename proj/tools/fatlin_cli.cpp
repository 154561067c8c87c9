// fatlin: classify, reduce, verify and sweep L3(d; m) systems.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 criteria/oracle disagreement,
// 3 internal invariant breach (failed certificate for a true verdict,
// oracle shape/h1 violations, sampling failure).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "fatlin/class_text.hpp"
#include "fatlin/report.hpp"
#include "fatlin/simd/kernels.hpp"
#include "fatlin/sweep.hpp"

using namespace fatlin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;
constexpr int kExitBreach = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string cls;
  std::string goal;
  std::string mode = "on-anticanonical";
  std::string format = "text";
  std::string out;
  std::vector<std::uint32_t> primes;
  std::uint64_t seed = 1;
  int trials = 5;
  int probes = 64;
  bool no_probes = false;
  bool keep_zeros = false;
  std::string degrees = "0:3";
  std::string points = "0:6";
  std::string mults = "1";
  std::string engines = "both";
  unsigned threads = 0;
};

Mode mode_of(const Options& o) {
  auto m = parse_mode(o.mode);
  if (!m) throw UsageError("unknown mode '" + o.mode + "' (on-anticanonical | general-position)");
  return *m;
}

Format format_of(const Options& o) {
  auto f = parse_format(o.format);
  if (!f) throw UsageError("unknown format '" + o.format + "' (text | json | csv)");
  return *f;
}

FieldConfig field_of(const Options& o) {
  FieldConfig cfg;
  if (!o.primes.empty()) cfg.primes = o.primes;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.probes = o.probes;
  cfg.mode = mode_of(o);
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

// "a:b", or "b" meaning floor:b.
Range range_of(const std::string& text, int floor, const char* name) {
  try {
    std::size_t pos = 0;
    const auto colon = text.find(':');
    Range r;
    if (colon == std::string::npos) {
      r = {floor, std::stoi(text, &pos)};
      if (pos != text.size()) throw std::invalid_argument(text);
    } else {
      r.lo = std::stoi(text.substr(0, colon), &pos);
      if (pos != colon) throw std::invalid_argument(text);
      const std::string hi = text.substr(colon + 1);
      r.hi = std::stoi(hi, &pos);
      if (pos != hi.size()) throw std::invalid_argument(text);
    }
    return r;
  } catch (const std::logic_error&) {
    throw UsageError(std::string("bad ") + name + " range '" + text + "' (expected a:b or b)");
  }
}

ThreefoldClass threefold_of(const std::string& text) { return parse_threefold(text); }

void emit(const Options& o, const std::string& body) {
  if (o.out.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << body;
}

std::string as_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_classify(const Options& o) {
  const ThreefoldClass c = threefold_of(o.cls);
  const Classification cl =
      classify(c, mode_of(o), o.keep_zeros ? ZeroPolicy::Keep : ZeroPolicy::Drop);
  emit(o, format_of(o) == Format::Json ? as_text(to_json(cl)) : render_text(cl));
  return kExitOk;
}

int cmd_reduce(const Options& o) {
  const ThreefoldClass c = threefold_of(o.cls);
  const auto goal = parse_goal(o.goal);
  if (!goal) throw UsageError("unknown goal '" + o.goal + "' (ns | bpf | va)");
  const Certificate cert = build_certificate(c, *goal);
  emit(o, format_of(o) == Format::Json ? as_text(to_json(cert)) : render_text(cert));
  const auto issues = audit_certificate(cert);
  for (const auto& i : issues) std::cerr << "audit: " << i << '\n';
  const Classification cl = classify(c);
  const bool claimed = *goal == Goal::NS   ? cl.nonspecial.value == Tri::Yes
                       : *goal == Goal::BPF ? cl.bpf.value
                                            : cl.very_ample.value;
  if (!issues.empty() || (claimed && !cert.succeeded())) return kExitBreach;
  return kExitOk;
}

int cmd_oracle(const Options& o) {
  const ThreefoldClass c = threefold_of(o.cls);
  const FieldConfig cfg = field_of(o);
  OracleReport rep;
  try {
    rep = dim_system(c, cfg, !o.no_probes);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Agreement ag = compare(classify(c, cfg.mode), rep);
  emit(o, format_of(o) == Format::Json ? as_text(to_json(rep, &ag)) : render_text(rep, &ag));
  if (!rep.breaches.empty()) return kExitBreach;
  return ag.all() ? kExitOk : kExitDisagree;
}

int cmd_sweep(const Options& o) {
  SweepSpec spec;
  spec.degrees = range_of(o.degrees, 0, "degree");
  spec.points = range_of(o.points, 0, "points");
  spec.mults = range_of(o.mults, 1, "multiplicity");
  auto engines = parse_engines(o.engines);
  if (!engines) throw UsageError("unknown engines '" + o.engines + "' (criteria | oracle | both)");
  spec.engines = *engines;
  spec.format = format_of(o);
  spec.field = field_of(o);
  spec.threads = o.threads;
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SweepResult res = run_sweep(spec);
  emit(o, render(res, spec.format));
  return res.exit_code();
}

int cmd_vdim(const Options& o) {
  const AnyClass c = parse_class(o.cls);
  std::string body;
  if (const auto* t = std::get_if<ThreefoldClass>(&c)) {
    body = to_string(*t) + "  vdim " + std::to_string(vdim3(*t)) + "  edim " +
           std::to_string(edim3(*t)) + "  conditions " + std::to_string(condition_count(*t)) + "\n";
  } else if (const auto* q = std::get_if<QuadricClass>(&c)) {
    body = to_string(*q) + "  vdim " + std::to_string(vdim_quadric(*q)) + "  c·K " +
           std::to_string(k_intersection(*q)) + "\n";
  } else {
    const auto& p = std::get<PlaneClass>(c);
    const Reduction red = cremona_reduce(p);
    body = to_string(p) + "  vdim " + std::to_string(vdim2(p)) + "  c·K " +
           std::to_string(k_intersection(p)) + "  reduces to " + to_string(red.result) +
           (red.log.status == ReductionStatus::InStandardForm ? " (standard)" : " (not standard)") +
           "\n";
  }
  emit(o, body);
  return kExitOk;
}

void add_output(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "text | json (sweep also: csv)");
  app->add_option("--out", o.out, "write to a file instead of stdout");
}

void add_field(CLI::App* app, Options& o) {
  app->add_option("--mode", o.mode, "on-anticanonical | general-position");
  app->add_option("--prime", o.primes, "prime modulus (repeatable; default: three built-in primes)");
  app->add_option("--seed", o.seed, "base seed");
  app->add_option("--trials", o.trials, "geometries per prime");
  app->add_option("--probes", o.probes, "samples per probe category");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fatlin: linear systems of fat points on the anticanonical curve of a quadric"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "criteria verdicts for a class");
  classify_cmd->add_option("class", o.cls, "e.g. \"L3(5; 2^5,1^7)\"")->required();
  classify_cmd->add_option("--mode", o.mode, "on-anticanonical | general-position");
  classify_cmd->add_flag("--keep-zeros", o.keep_zeros, "count zero multiplicities towards r");
  add_output(classify_cmd, o);

  auto* reduce_cmd = app.add_subcommand("reduce", "certificate replaying the induction");
  reduce_cmd->add_option("class", o.cls)->required();
  reduce_cmd->add_option("goal", o.goal, "ns | bpf | va")->required();
  add_output(reduce_cmd, o);

  auto* oracle_cmd = app.add_subcommand("oracle", "exact dimension and probes over GF(p)");
  oracle_cmd->add_option("class", o.cls)->required();
  oracle_cmd->add_flag("--no-probes", o.no_probes, "dimension only");
  add_field(oracle_cmd, o);
  add_output(oracle_cmd, o);

  auto* sweep_cmd = app.add_subcommand("sweep", "classify and cross-check a box of classes");
  sweep_cmd->add_option("--degree", o.degrees, "d range a:b (default 0:3, cap 12)");
  sweep_cmd->add_option("--points", o.points, "r range a:b (default 0:6, cap 16)");
  sweep_cmd->add_option("--mult", o.mults, "multiplicity range a:b or max (default 1, cap 5)");
  sweep_cmd->add_option("--engines", o.engines, "criteria | oracle | both");
  sweep_cmd->add_option("--threads", o.threads, "worker threads (default: all cores)");
  add_field(sweep_cmd, o);
  add_output(sweep_cmd, o);

  auto* vdim_cmd = app.add_subcommand("vdim", "virtual dimension of an L3, LQ or L2 class");
  vdim_cmd->add_option("class", o.cls)->required();
  add_output(vdim_cmd, o);

  auto* isa_cmd = app.add_subcommand("isa", "list the vector kernels available on this CPU");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*reduce_cmd) return cmd_reduce(o);
    if (*oracle_cmd) return cmd_oracle(o);
    if (*sweep_cmd) return cmd_sweep(o);
    if (*vdim_cmd) return cmd_vdim(o);
    if (*isa_cmd) {
      for (auto isa : simd::available_isas()) std::cout << simd::isa_name(isa) << '\n';
      std::cout << "selected: " << simd::isa_name(simd::kernels().isa) << '\n';
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " in \"" << o.cls << "\"\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitBreach;
  }
  return kExitUsage;
}
