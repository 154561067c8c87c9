#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "fatlin/class_text.hpp"
#include "fatlin/oracle.hpp"
#include "fatlin/residual_curve.hpp"
#include "fatlin/unipoly.hpp"

using namespace fatlin;

namespace {

ThreefoldClass L3(std::string_view s) { return parse_threefold(s); }

FieldConfig quick(int trials = 2) {
  FieldConfig cfg;
  cfg.trials = trials;
  cfg.probes = 32;
  return cfg;
}

bool fired(const OracleReport& r, std::string_view name) {
  for (const auto& run : r.runs) {
    for (const auto* list : {&run.base, &run.separation}) {
      for (const auto& p : *list) {
        if (p.name == name && p.fired > 0) return true;
      }
    }
  }
  return false;
}

std::uint32_t eval_section(const MonomialBasis& b, const PrimeField& f, std::span<const std::uint32_t> sec,
                           const Point4& p) {
  std::vector<std::uint32_t> vals(b.size());
  evaluate_monomials(b, f, p, vals);
  std::uint32_t s = 0;
  for (std::size_t j = 0; j < b.size(); ++j) s = f.add(s, f.mul(sec[j], vals[j]));
  return s;
}

struct Trial {
  PrimeField f;
  GeometrySetup g;
};

Trial make_trial(std::size_t r, std::uint64_t seed = 4) {
  PrimeField f(default_primes()[0]);
  GeometrySetup g = begin_geometry(f, seed, Mode::OnAnticanonical);
  sample_points(g, r, f);
  return {f, std::move(g)};
}

}  // namespace

TEST_CASE("dimension examples") {
  const OracleReport a = dim_system(L3("L3(2; 1^9)"), quick(), false);
  CHECK(a.dim == 1);
  CHECK(a.vdim == 0);
  CHECK(a.h1 == 1);
  CHECK(a.special());
  CHECK(a.rows == 9);
  CHECK(a.cols == 10);

  CHECK(dim_system(L3("L3(1; 1,1)"), quick(), false).dim == 1);
  CHECK(dim_system(L3("L3(1;)"), quick(), false).dim == 3);
  CHECK(dim_system(L3("L3(2; 3)"), quick(), false).dim == -1);
  CHECK(dim_system(L3("L3(3; 3)"), quick(), false).dim == 9);  // cubic cones with a given vertex

  const OracleReport c = dim_system(L3("L3(3; 2,1^5)"), quick(), false);
  CHECK(c.dim == 10);
  CHECK(c.h1 == 0);
  CHECK(c.rank == 9);
  CHECK(c.cols == 20);
}

TEST_CASE("a single simple point gives its coordinates") {
  Trial t = make_trial(1);
  MonomialBasis b(1);
  ModMatrix m = conditions_matrix(L3("L3(1; 1)"), t.g, t.f, b);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 4);
  for (int k = 0; k < 4; ++k) CHECK(m(0, k) == t.g.points[0].pt[k]);
}

TEST_CASE("matrix shapes follow the condition count") {
  Trial t = make_trial(6);
  for (const char* s : {"L3(3; 2)", "L3(4; 3,2,1)", "L3(2; 1^6)", "L3(0; 2^2)", "L3(1; 3)"}) {
    const ThreefoldClass c = L3(s);
    MonomialBasis b(c.d);
    ModMatrix m = conditions_matrix(c, t.g, t.f, b);
    CHECK(static_cast<std::int64_t>(m.rows()) == condition_count(c));
    CHECK(static_cast<std::int64_t>(m.cols()) == binom3(c.d + 3));
  }
}

TEST_CASE("conditions matrix rejects bad input") {
  Trial t = make_trial(2);
  MonomialBasis b(2);
  CHECK_THROWS_AS(conditions_matrix(L3("L3(2; 1^3)"), t.g, t.f, b), std::invalid_argument);
  CHECK_THROWS_AS(conditions_matrix(ThreefoldClass{2, {-1}}, t.g, t.f, b), std::invalid_argument);
  FieldConfig cfg = quick(1);
  cfg.primes = {7};
  CHECK_THROWS_AS(dim_system(L3("L3(4; 1)"), cfg, false), std::invalid_argument);
}

TEST_CASE("sections vanish to the required order along random lines") {
  // F(P + tV) must have no terms below t^m. Checked by interpolation, with no
  // use of derivative rows.
  Trial t = make_trial(5, 9);
  std::mt19937_64 rng(99);
  for (const char* s : {"L3(4; 3,2,2,1)", "L3(5; 3,3,2,1,1)", "L3(3; 2^4)", "L3(3; 3)", "L3(2; 2)"}) {
    const ThreefoldClass c = L3(s);
    MonomialBasis b(c.d);
    const SectionSpace sp = solve_sections(c, t.g, t.f, b);
    REQUIRE(sp.sections.rows() > 0);
    for (std::size_t v = 0; v < sp.sections.rows(); ++v) {
      for (std::size_t i = 0; i < c.mults.size(); ++i) {
        const Point4 p = t.g.points[i].pt;
        Point4 dir;
        for (auto& x : dir) x = t.f.random(rng);
        std::vector<std::uint32_t> xs, ys;
        for (int k = 0; k <= c.d; ++k) {
          const auto tt = static_cast<std::uint32_t>(k + 1);
          Point4 q;
          for (int a = 0; a < 4; ++a) q[a] = t.f.add(p[a], t.f.mul(tt, dir[a]));
          xs.push_back(tt);
          ys.push_back(eval_section(b, t.f, sp.sections.row(v), q));
        }
        UniPoly line = interpolate(xs, ys, t.f);
        line.resize(static_cast<std::size_t>(c.d) + 1, 0);
        for (int k = 0; k < std::min(c.mults[i], c.d + 1); ++k) CHECK(line[k] == 0);
      }
    }
  }
}

TEST_CASE("elimination results do not depend on the kernel") {
  Trial t = make_trial(10, 3);
  const ThreefoldClass c = L3("L3(6; 3,3,2^4,1^4)");
  MonomialBasis b(c.d);
  const SectionSpace ref = solve_sections(c, t.g, t.f, b, simd::scalar_kernels());
  for (auto isa : simd::available_isas()) {
    const SectionSpace sp = solve_sections(c, t.g, t.f, b, simd::kernels_for(isa));
    CHECK(sp.rank == ref.rank);
    CHECK(sp.sections == ref.sections);
  }
}

TEST_CASE("reports are deterministic and bounded below by edim") {
  const FieldConfig cfg = quick(2);
  for (const char* s : {"L3(3; 2,2)", "L3(2; 1^9)", "L3(4; 2^3,1^8)", "L3(2; 1^12)"}) {
    const OracleReport a = dim_system(L3(s), cfg);
    const OracleReport b = dim_system(L3(s), cfg);
    CHECK(a.dim == b.dim);
    CHECK(a.dim_max == b.dim_max);
    REQUIRE(a.runs.size() == b.runs.size());
    for (std::size_t i = 0; i < a.runs.size(); ++i) {
      CHECK(a.runs[i].seed == b.runs[i].seed);
      CHECK(a.runs[i].base.size() == b.runs[i].base.size());
      for (std::size_t k = 0; k < a.runs[i].base.size(); ++k) {
        CHECK(a.runs[i].base[k].fired == b.runs[i].base[k].fired);
        CHECK(a.runs[i].base[k].witness == b.runs[i].base[k].witness);
      }
    }
    CHECK(a.dim >= a.edim);
    CHECK(a.breaches.empty());
    CHECK(a.runs.size() == cfg.primes.size() * static_cast<std::size_t>(cfg.trials));
  }
}

TEST_CASE("base locus probes") {
  const FieldConfig cfg = quick();
  const OracleReport eight = dim_system(L3("L3(2; 1^8)"), cfg);
  CHECK(fired(eight, "on D"));
  CHECK_FALSE(eight.bpf_evidence);

  const OracleReport planes = dim_system(L3("L3(1;)"), cfg);
  CHECK(planes.bpf_evidence);
  CHECK(planes.va_evidence);

  CHECK(fired(dim_system(L3("L3(1; 1,1)"), cfg), "on line"));
  CHECK_FALSE(fired(dim_system(L3("L3(2; 1,1)"), cfg), "on line"));

  // seven points of D: every quadric through them passes through an eighth
  const OracleReport seven = dim_system(L3("L3(2; 1^7)"), cfg);
  CHECK(fired(seven, "residual on D"));

  const OracleReport empty = dim_system(L3("L3(1; 1^4)"), cfg);
  CHECK(empty.dim == -1);
  CHECK(fired(empty, "empty system"));
}

TEST_CASE("separation probes") {
  const FieldConfig cfg = quick();
  CHECK(fired(dim_system(L3("L3(2; 1^9)"), cfg), "pair on D"));
  CHECK(fired(dim_system(L3("L3(3; 2,2)"), cfg), "pair on line"));
  const OracleReport ok = dim_system(L3("L3(3; 1^8)"), cfg);
  CHECK(ok.va_evidence);
  CHECK(ok.bpf_evidence);
}

TEST_CASE("agreement with the criteria") {
  const FieldConfig cfg = quick();
  for (const char* s : {"L3(2; 1^9)", "L3(2; 1^8)", "L3(3; 2,2)", "L3(5; 2^5,1^7)", "L3(0;)",
                        "L3(1; 2)", "L3(3; 1^10)"}) {
    const ThreefoldClass c = L3(s);
    const Agreement a = compare(classify(c), dim_system(c, cfg));
    CAPTURE(s);
    CHECK(a.all());
  }
}

TEST_CASE("residual points lie on D and on the section") {
  Trial t = make_trial(9, 12);
  std::mt19937_64 rng(5);
  for (const char* s : {"L3(2; 1^7)", "L3(3; 2,1^8)"}) {
    const ThreefoldClass c = L3(s);
    MonomialBasis b(c.d);
    const SectionSpace sp = solve_sections(c, t.g, t.f, b);
    REQUIRE(sp.sections.rows() > 0);
    std::vector<std::uint32_t> sec(b.size(), 0);
    for (std::size_t v = 0; v < sp.sections.rows(); ++v) {
      const std::uint32_t w = t.f.random(rng);
      for (std::size_t j = 0; j < b.size(); ++j) sec[j] = t.f.add(sec[j], t.f.mul(w, sp.sections(v, j)));
    }
    const ResidualPoints rp = residual_points_on_curve(t.g, c.mults, b, sec, t.f);
    REQUIRE(rp.evaluated);
    CHECK(rp.degree == 4 * c.d - static_cast<int>(mult_sum(c.mults)));
    for (const auto& cp : rp.points) {
      CHECK(t.g.fixed.eval(t.f, cp.pt) == 0);
      CHECK(t.g.second.eval(t.f, cp.pt) == 0);
      CHECK(eval_section(b, t.f, sec, cp.pt) == 0);
      for (const auto& q : t.g.points) CHECK_FALSE(same_projective_point(t.f, q.pt, cp.pt));
    }
  }
}

TEST_CASE("curve resultant vanishes at the sampled points") {
  Trial t = make_trial(6, 21);
  const ThreefoldClass c = L3("L3(3; 1^6)");
  MonomialBasis b(3);
  const SectionSpace sp = solve_sections(c, t.g, t.f, b);
  const ChartPoly poly = restrict_to_chart(b, sp.sections.row(0), t.f);
  const UniPoly res = curve_resultant(t.g, poly, t.f);
  for (const auto& p : t.g.points) CHECK(eval(res, p.s, t.f) == 0);
  CHECK(degree(res) <= 12);
}

TEST_CASE("field configuration validation") {
  FieldConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.trials = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.primes = {15};
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.primes = {};
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  CHECK(trial_seed(FieldConfig{}, 0) != trial_seed(FieldConfig{}, 1));
}

TEST_CASE("general-position mode") {
  FieldConfig cfg = quick(1);
  cfg.mode = Mode::GeneralPosition;
  const OracleReport r = dim_system(L3("L3(2; 1^9)"), cfg);
  CHECK(r.dim == 0);  // nine general points impose independent conditions on quadrics
  const OracleReport q = dim_system(L3("L3(3; 1^8)"), cfg);
  CHECK(q.h1 == 0);
  CHECK(compare(classify(L3("L3(3; 1^8)"), Mode::GeneralPosition), q).all());
}
