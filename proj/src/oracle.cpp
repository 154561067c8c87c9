#include "fatlin/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fatlin/class_text.hpp"
#include "fatlin/residual_curve.hpp"

namespace fatlin {

namespace {

constexpr std::size_t kSketchRows = 4;
constexpr int kResidualSections = 4;
constexpr int kResidualPairs = 8;
constexpr std::size_t kTopPoints = 4;

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_point(const Point4& p) {
  return "(" + std::to_string(p[0]) + ":" + std::to_string(p[1]) + ":" + std::to_string(p[2]) +
         ":" + std::to_string(p[3]) + ")";
}

Point4 affine_combo(const PrimeField& f, const Point4& a, std::uint32_t t, const Point4& b) {
  Point4 out;
  for (int i = 0; i < 4; ++i) out[i] = f.add(a[i], f.mul(t, b[i]));
  return out;
}

// Evaluates linear functionals on the section space. A random sketch of at
// most four sections answers most queries; degenerate answers are confirmed
// on the full basis.
class Evaluator {
 public:
  Evaluator(const ProbeContext& ctx, std::mt19937_64& rng)
      : ctx_(ctx), k_(simd::kernels()), n_(ctx.basis.size()) {
    const ModMatrix& s = ctx.space.sections;
    if (s.rows() <= kSketchRows) {
      sketch_ = s;
      return;
    }
    sketch_ = ModMatrix(kSketchRows, n_);
    const PrimeField& f = ctx.field;
    for (std::size_t i = 0; i < kSketchRows; ++i) {
      for (std::size_t r = 0; r < s.rows(); ++r) {
        const std::uint32_t c = f.random(rng);
        k_.submul(sketch_.row(i).data(), s.row(r).data(), f.neg(c), f.shoup(f.neg(c)),
                  f.prime(), n_);
      }
    }
  }

  std::size_t functional_size() const noexcept { return n_; }

  bool vanishes(std::span<const std::uint32_t> v) const {
    if (!all_zero(sketch_, v)) return false;
    return all_zero(ctx_.space.sections, v);
  }

  bool separates(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const {
    if (pair_rank(sketch_, a, b) == 2) return true;
    return pair_rank(ctx_.space.sections, a, b) == 2;
  }

  std::vector<std::uint32_t> random_section(std::mt19937_64& rng) const {
    const PrimeField& f = ctx_.field;
    const ModMatrix& s = ctx_.space.sections;
    std::vector<std::uint32_t> out(n_, 0);
    for (std::size_t r = 0; r < s.rows(); ++r) {
      const std::uint32_t c = f.neg(f.random(rng));
      k_.submul(out.data(), s.row(r).data(), c, f.shoup(c), f.prime(), n_);
    }
    return out;
  }

  std::uint32_t apply(std::span<const std::uint32_t> section,
                      std::span<const std::uint32_t> v) const {
    return k_.dot(section.data(), v.data(), ctx_.field.prime(), n_);
  }

 private:
  bool all_zero(const ModMatrix& m, std::span<const std::uint32_t> v) const {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (k_.dot(m.row(i).data(), v.data(), ctx_.field.prime(), n_) != 0) return false;
    }
    return true;
  }

  std::size_t pair_rank(const ModMatrix& m, std::span<const std::uint32_t> a,
                        std::span<const std::uint32_t> b) const {
    const PrimeField& f = ctx_.field;
    const std::uint32_t p = f.prime();
    std::vector<std::uint32_t> xa(m.rows()), xb(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      xa[i] = k_.dot(m.row(i).data(), a.data(), p, n_);
      xb[i] = k_.dot(m.row(i).data(), b.data(), p, n_);
    }
    auto lead = std::find_if(xa.begin(), xa.end(), [](std::uint32_t x) { return x != 0; });
    if (lead == xa.end()) {
      return std::any_of(xb.begin(), xb.end(), [](std::uint32_t x) { return x != 0; }) ? 1 : 0;
    }
    const std::size_t i0 = static_cast<std::size_t>(lead - xa.begin());
    for (std::size_t j = 0; j < xa.size(); ++j) {
      if (f.mul(xa[i0], xb[j]) != f.mul(xa[j], xb[i0])) return 2;
    }
    return 1;
  }

  const ProbeContext& ctx_;
  const simd::ModKernels& k_;
  std::size_t n_;
  ModMatrix sketch_;
};

struct Probe {
  const ProbeContext& ctx;
  const Evaluator& ev;
  std::vector<std::uint32_t> va, vb;

  Probe(const ProbeContext& c, const Evaluator& e)
      : ctx(c), ev(e), va(e.functional_size()), vb(e.functional_size()) {}

  void base_point(ProbeResult& pr, const Point4& p, const std::string& where) {
    ++pr.attempted;
    evaluate_monomials(ctx.basis, ctx.field, p, va);
    if (ev.vanishes(va)) {
      if (pr.fired++ == 0) pr.witness = where + " " + format_point(p);
    }
  }

  void pair(ProbeResult& pr, const Point4& p, const Point4& q, const std::string& where) {
    ++pr.attempted;
    evaluate_monomials(ctx.basis, ctx.field, p, va);
    evaluate_monomials(ctx.basis, ctx.field, q, vb);
    if (!ev.separates(va, vb)) {
      if (pr.fired++ == 0) pr.witness = where + " " + format_point(p) + " " + format_point(q);
    }
  }

  void tangent(ProbeResult& pr, const Point4& p, const Point4& dir, const std::string& where) {
    ++pr.attempted;
    evaluate_monomials(ctx.basis, ctx.field, p, va);
    directional_derivative(ctx.basis, ctx.field, p, dir, vb);
    if (!ev.separates(va, vb)) {
      if (pr.fired++ == 0) {
        pr.witness = where + " " + format_point(p) + " along " + format_point(dir);
      }
    }
  }
};

std::vector<std::pair<std::size_t, std::size_t>> top_lines(const ProbeContext& ctx) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t r = std::min(ctx.cls.mults.size(), kTopPoints);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::string line_name(std::size_t i, std::size_t j) {
  return "line P" + std::to_string(i + 1) + "P" + std::to_string(j + 1);
}

std::int64_t curve_degree(const ThreefoldClass& c) { return 4LL * c.d - mult_sum(c.mults); }

ProbeResult named(std::string name) {
  ProbeResult pr;
  pr.name = std::move(name);
  return pr;
}

ProbeResult empty_system() { return {"empty system", 1, 1, "no sections", ""}; }

}  // namespace

void validate(const FieldConfig& cfg) {
  if (cfg.primes.empty()) throw std::invalid_argument("field config: no primes");
  for (std::uint32_t p : cfg.primes) {
    if (p < 3 || p >= (1U << 31) || !is_prime(p)) {
      throw std::invalid_argument("field config: " + std::to_string(p) +
                                  " is not an odd prime below 2^31");
    }
  }
  if (cfg.trials < 1) throw std::invalid_argument("field config: trials must be >= 1");
  if (cfg.probes < 1) throw std::invalid_argument("field config: probes must be >= 1");
}

std::uint64_t trial_seed(const FieldConfig& cfg, int t) noexcept {
  return mix_seed(cfg.seed + static_cast<std::uint64_t>(t));
}

ModMatrix conditions_matrix(const ThreefoldClass& c, const GeometrySetup& g, const PrimeField& f,
                            const MonomialBasis& basis) {
  if (c.d < 0) throw std::invalid_argument("conditions_matrix: negative degree");
  if (basis.degree() != c.d) throw std::invalid_argument("conditions_matrix: basis degree mismatch");
  if (f.prime() <= static_cast<std::uint32_t>(c.d)) {
    throw std::invalid_argument("conditions_matrix: prime " + std::to_string(f.prime()) +
                                " must exceed the degree " + std::to_string(c.d));
  }
  if (c.mults.size() > g.points.size()) {
    throw std::invalid_argument("conditions_matrix: class has more points than the geometry");
  }
  std::size_t rows = 0;
  for (int m : c.mults) {
    if (m < 0) throw std::invalid_argument("conditions_matrix: negative multiplicity");
    rows += static_cast<std::size_t>(binom3(m + 2));
  }
  ModMatrix out(rows, basis.size());
  std::size_t row = 0;
  for (std::size_t i = 0; i < c.mults.size(); ++i) {
    if (c.mults[i] == 0) continue;
    // Order d partials already force F = 0; the remaining rows stay zero.
    const std::size_t end = row + static_cast<std::size_t>(binom3(c.mults[i] + 2));
    for (const Exponent& alpha : graded_lex_exponents(std::min(c.mults[i] - 1, c.d))) {
      derivative_row(basis, f, g.points[i].pt, alpha, out.row(row++));
    }
    row = end;
  }
  return out;
}

SectionSpace solve_sections(const ThreefoldClass& c, const GeometrySetup& g, const PrimeField& f,
                            const MonomialBasis& basis, const simd::ModKernels& k) {
  ModMatrix m = conditions_matrix(c, g, f, basis);
  SectionSpace out;
  out.rows = m.rows();
  out.cols = m.cols();
  EchelonForm e = reduce_to_rref(m, f, k);
  out.rank = e.rank;
  out.sections = nullspace_from_rref(m, e, f);
  return out;
}

std::vector<ProbeResult> probe_base_locus(const ProbeContext& ctx, std::mt19937_64& rng) {
  if (ctx.space.sections.rows() == 0) return {empty_system()};
  const PrimeField& f = ctx.field;
  const GeometrySetup& g = ctx.geometry;
  Evaluator ev(ctx, rng);
  Probe probe(ctx, ev);
  std::vector<ProbeResult> out;

  ProbeResult generic = named("generic");
  for (int i = 0; i < ctx.count; ++i) probe.base_point(generic, random_space_point(f, rng), "generic");
  out.push_back(generic);

  if (g.on_curve()) {
    ProbeResult on_d = named("on D");
    for (int i = 0; i < ctx.count; ++i) {
      probe.base_point(on_d, random_curve_point(g, f, rng).pt, "on D");
    }
    out.push_back(on_d);
  }

  const auto lines = top_lines(ctx);
  if (!lines.empty()) {
    ProbeResult line = named("on line");
    const int per_line = std::max<int>(4, ctx.count / static_cast<int>(lines.size()));
    for (auto [i, j] : lines) {
      for (int n = 0; n < per_line; ++n) {
        probe.base_point(line, affine_combo(f, g.points[i].pt, f.random_nonzero(rng), g.points[j].pt),
                         line_name(i, j));
      }
    }
    out.push_back(line);
  }

  if (g.on_curve()) {
    ProbeResult residual = named("residual on D");
    const std::int64_t e = curve_degree(ctx.cls);
    if (e < 1 || e > 2) {
      residual.note = "skipped: degree on D is " + std::to_string(e);
    } else {
      for (int n = 0; n < kResidualSections; ++n) {
        auto section = ev.random_section(rng);
        auto pts = residual_points_on_curve(g, ctx.cls.mults, ctx.basis, section, f);
        if (!pts.evaluated) {
          residual.note = pts.note;
          continue;
        }
        for (const auto& cp : pts.points) probe.base_point(residual, cp.pt, "residual on D");
      }
    }
    out.push_back(residual);
  }
  return out;
}

std::vector<ProbeResult> probe_separation(const ProbeContext& ctx, std::mt19937_64& rng) {
  if (ctx.space.sections.rows() == 0) return {empty_system()};
  const PrimeField& f = ctx.field;
  const GeometrySetup& g = ctx.geometry;
  Evaluator ev(ctx, rng);
  Probe probe(ctx, ev);
  std::vector<ProbeResult> out;

  ProbeResult generic = named("pair generic");
  for (int i = 0; i < ctx.count; ++i) {
    probe.pair(generic, random_space_point(f, rng), random_space_point(f, rng), "generic");
  }
  out.push_back(generic);

  if (g.on_curve()) {
    ProbeResult on_d = named("pair on D");
    ProbeResult mixed = named("pair mixed");
    for (int i = 0; i < ctx.count; ++i) {
      probe.pair(on_d, random_curve_point(g, f, rng).pt, random_curve_point(g, f, rng).pt, "on D");
      probe.pair(mixed, random_curve_point(g, f, rng).pt, random_space_point(f, rng), "mixed");
    }
    out.push_back(on_d);
    out.push_back(mixed);
  }

  const std::size_t top = std::min(ctx.cls.mults.size(), kTopPoints);
  if (top > 0) {
    ProbeResult line = named("pair on line");
    const auto lines = top_lines(ctx);
    const int per_line =
        std::max<int>(2, ctx.count / static_cast<int>(lines.size() + top));
    auto two_on = [&](const Point4& base, const Point4& dir, const std::string& name) {
      const std::uint32_t t1 = f.random_nonzero(rng);
      std::uint32_t t2 = f.random_nonzero(rng);
      while (t2 == t1) t2 = f.random_nonzero(rng);
      probe.pair(line, affine_combo(f, base, t1, dir), affine_combo(f, base, t2, dir), name);
    };
    for (auto [i, j] : lines) {
      for (int n = 0; n < per_line; ++n) two_on(g.points[i].pt, g.points[j].pt, line_name(i, j));
    }
    for (std::size_t i = 0; i < top; ++i) {
      for (int n = 0; n < per_line; ++n) {
        two_on(g.points[i].pt, random_space_point(f, rng),
               "line P" + std::to_string(i + 1) + "Q");
      }
    }
    out.push_back(line);
  }

  ProbeResult tangent = named("tangent generic");
  for (int i = 0; i < ctx.count; ++i) {
    probe.tangent(tangent, random_space_point(f, rng), random_space_point(f, rng), "generic");
  }
  out.push_back(tangent);

  if (g.on_curve()) {
    ProbeResult tangent_d = named("tangent on D");
    for (int i = 0; i < ctx.count; ++i) {
      const CurvePoint x = random_curve_point(g, f, rng);
      if (auto dir = curve_tangent(g, f, x.pt)) probe.tangent(tangent_d, x.pt, *dir, "on D");
    }
    out.push_back(tangent_d);

    ProbeResult residual = named("pair residual on D");
    const std::int64_t e = curve_degree(ctx.cls);
    if (e < 2 || e > 3) {
      residual.note = "skipped: degree on D is " + std::to_string(e);
    } else if (ctx.space.sections.rows() < 2) {
      residual.note = "skipped: fewer than two sections";
    } else {
      std::vector<std::uint32_t> vx(ev.functional_size());
      for (int n = 0; n < std::min(ctx.count, kResidualPairs); ++n) {
        const CurvePoint x = random_curve_point(g, f, rng);
        evaluate_monomials(ctx.basis, f, x.pt, vx);
        auto f1 = ev.random_section(rng);
        auto f2 = ev.random_section(rng);
        const std::uint32_t a = ev.apply(f1, vx);
        const std::uint32_t b = ev.apply(f2, vx);
        if (a == 0 && b == 0) continue;
        // b f1 - a f2 vanishes at x
        std::vector<std::uint32_t> sec(f1.size());
        for (std::size_t j = 0; j < sec.size(); ++j) {
          sec[j] = f.sub(f.mul(b, f1[j]), f.mul(a, f2[j]));
        }
        auto pts = residual_points_on_curve(g, ctx.cls.mults, ctx.basis, sec, f, &x);
        if (!pts.evaluated) {
          residual.note = pts.note;
          continue;
        }
        for (const auto& y : pts.points) {
          if (y == x) {
            if (auto dir = curve_tangent(g, f, x.pt)) {
              probe.tangent(residual, x.pt, *dir, "residual tangent on D");
            }
          } else {
            probe.pair(residual, x.pt, y.pt, "residual pair on D");
          }
        }
      }
    }
    out.push_back(residual);
  }
  return out;
}

bool TrialReport::base_fired() const noexcept {
  return std::any_of(base.begin(), base.end(), [](const ProbeResult& p) { return p.fired > 0; });
}

bool TrialReport::separation_fired() const noexcept {
  return std::any_of(separation.begin(), separation.end(),
                     [](const ProbeResult& p) { return p.fired > 0; });
}

Oracle::Oracle(FieldConfig cfg, std::size_t max_points)
    : cfg_(std::move(cfg)), max_points_(max_points) {
  validate(cfg_);
  for (std::uint32_t p : cfg_.primes) {
    PrimeField field(p);
    for (int t = 0; t < cfg_.trials; ++t) {
      GeometrySetup g = begin_geometry(field, trial_seed(cfg_, t), cfg_.mode);
      sample_points(g, max_points_, field);
      trials_.push_back({field, std::move(g)});
    }
  }
}

OracleReport Oracle::run(const ThreefoldClass& c, bool probes) const {
  OracleReport rep;
  rep.input = c;
  if (c.d < 0) throw std::invalid_argument("oracle: degree must be >= 0");
  for (int m : c.mults) {
    if (m < 0) throw std::invalid_argument("oracle: multiplicities must be >= 0");
  }
  rep.tested = normalized(c);
  if (rep.tested.mults.size() > max_points_) {
    throw std::invalid_argument("oracle: class has " + std::to_string(rep.tested.mults.size()) +
                                " points, battery was sampled with " + std::to_string(max_points_));
  }
  for (std::uint32_t p : cfg_.primes) {
    if (p <= 2U * static_cast<std::uint32_t>(rep.tested.d)) {
      throw std::invalid_argument("oracle: prime " + std::to_string(p) +
                                  " must exceed twice the degree");
    }
  }
  rep.mode = cfg_.mode;
  rep.primes = cfg_.primes;
  rep.seed = cfg_.seed;
  rep.trials = cfg_.trials;
  rep.probes = cfg_.probes;
  rep.probed = probes;
  rep.vdim = vdim3(rep.tested);
  rep.edim = edim3(rep.tested);

  const MonomialBasis basis(rep.tested.d);
  const std::uint64_t class_hash = fnv1a(to_string(rep.tested));
  bool first = true;
  for (std::size_t t = 0; t < trials_.size(); ++t) {
    const Trial& trial = trials_[t];
    const PrimeField& f = trial.field;
    SectionSpace space = solve_sections(rep.tested, trial.geometry, f, basis);

    TrialReport tr;
    tr.prime = f.prime();
    tr.seed = trial.geometry.seed;
    tr.rank = space.rank;
    tr.h0 = static_cast<std::int64_t>(space.cols - space.rank);
    tr.dim = tr.h0 - 1;
    tr.h1 = tr.h0 - (rep.vdim + 1);

    if (first) {
      rep.rows = space.rows;
      rep.cols = space.cols;
      if (static_cast<std::int64_t>(space.rows) != condition_count(rep.tested) ||
          static_cast<std::int64_t>(space.cols) != binom3(rep.tested.d + 3)) {
        rep.breaches.push_back("matrix shape does not match the condition count");
      }
    }
    if (tr.h1 < 0) {
      rep.breaches.push_back("h1 < 0 at p=" + std::to_string(tr.prime));
    }
    if (tr.dim < rep.edim) {
      rep.breaches.push_back("dim < edim at p=" + std::to_string(tr.prime));
    }

    if (probes) {
      std::mt19937_64 rng(mix_seed(tr.seed ^ class_hash ^ (std::uint64_t{tr.prime} << 17)));
      ProbeContext ctx{rep.tested, trial.geometry, f, basis, space, cfg_.probes};
      tr.base = probe_base_locus(ctx, rng);
      tr.separation = probe_separation(ctx, rng);
      if (tr.base_fired()) rep.bpf_evidence = false;
      if (tr.separation_fired()) rep.va_evidence = false;
    }

    if (first || tr.dim < rep.dim_min) {
      rep.dim_min = tr.dim;
      rep.rank = tr.rank;
      rep.h0 = tr.h0;
      rep.dim = tr.dim;
      rep.h1 = tr.h1;
    }
    rep.dim_max = first ? tr.dim : std::max(rep.dim_max, tr.dim);
    first = false;
    rep.runs.push_back(std::move(tr));
  }
  return rep;
}

OracleReport dim_system(const ThreefoldClass& c, const FieldConfig& cfg, bool probes) {
  std::size_t r = 0;
  for (int m : c.mults) r += m != 0 ? 1 : 0;
  return Oracle(cfg, r).run(c, probes);
}

namespace {

std::string first_witness(const OracleReport& rep, bool base) {
  for (const auto& run : rep.runs) {
    for (const auto& pr : base ? run.base : run.separation) {
      if (pr.fired > 0) {
        return pr.name + " at p=" + std::to_string(run.prime) + ": " + pr.witness;
      }
    }
  }
  return {};
}

}  // namespace

Agreement compare(const Classification& cls, const OracleReport& rep) {
  Agreement a;
  const bool exact = rep.mode == Mode::OnAnticanonical;
  if (cls.nonspecial.value == Tri::Yes) {
    for (const auto& run : rep.runs) {
      if (run.h1 != 0) {
        a.nonspecial = false;
        a.notes.push_back("nonspecial Yes but h1=" + std::to_string(run.h1) +
                          " at p=" + std::to_string(run.prime));
        break;
      }
    }
  }
  if (!rep.probed) return a;
  if (cls.bpf.value && !rep.bpf_evidence) {
    a.bpf = false;
    a.notes.push_back("bpf true but a base point was found: " + first_witness(rep, true));
  } else if (exact && !cls.bpf.value && rep.bpf_evidence) {
    a.bpf = false;
    a.notes.push_back("bpf false but no base-locus probe fired");
  }
  if (cls.very_ample.value && !rep.va_evidence) {
    a.very_ample = false;
    a.notes.push_back("very ample true but a probe was not separated: " +
                      first_witness(rep, false));
  } else if (exact && !cls.very_ample.value && cls.bpf.value && rep.va_evidence) {
    a.very_ample = false;
    a.notes.push_back("very ample false but every separation probe reached rank 2");
  }
  return a;
}

}  // namespace fatlin
