#pragma once

// Brute-force verification of fat-point systems over GF(p): exact dimensions
// by elimination on the conditions matrix, and sampling probes for base
// points and for separation of length-2 subschemes.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fatlin/criteria.hpp"
#include "fatlin/divclass.hpp"
#include "fatlin/geometry.hpp"
#include "fatlin/linalg.hpp"
#include "fatlin/monomials.hpp"

namespace fatlin {

struct FieldConfig {
  std::vector<std::uint32_t> primes = default_primes();
  std::uint64_t seed = 1;
  int trials = 5;   ///< geometries per prime
  int probes = 64;  ///< sample count per probe category
  Mode mode = Mode::OnAnticanonical;
};

/// Throws std::invalid_argument naming the bad field.
void validate(const FieldConfig& cfg);

/// Seed of the t-th geometry for every prime.
std::uint64_t trial_seed(const FieldConfig& cfg, int t) noexcept;

/// Sum C(m_i+2,3) rows: d^alpha F(P_i) = 0 for |alpha| = m_i - 1, which by
/// Euler's identity span all partials of order < m_i once p > d. When
/// m_i > d the order-d partials are used and the leftover rows are zero.
/// Points are taken in order, P_i carrying mults[i].
/// Throws std::invalid_argument for d < 0, negative mults, p <= d, or too few
/// points.
ModMatrix conditions_matrix(const ThreefoldClass& c, const GeometrySetup& g, const PrimeField& f,
                            const MonomialBasis& basis);

/// Basis of the sections (the kernel of the conditions matrix), one per row.
struct SectionSpace {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  ModMatrix sections;
};

SectionSpace solve_sections(const ThreefoldClass& c, const GeometrySetup& g, const PrimeField& f,
                            const MonomialBasis& basis,
                            const simd::ModKernels& k = simd::kernels());

struct ProbeResult {
  std::string name;
  std::size_t attempted = 0;
  /// Base probes: points where every section vanished.
  /// Separation probes: length-2 subschemes imposing at most one condition.
  std::size_t fired = 0;
  std::string witness;
  std::string note;
};

struct ProbeContext {
  const ThreefoldClass& cls;  ///< normalized, as used for the matrix
  const GeometrySetup& geometry;
  const PrimeField& field;
  const MonomialBasis& basis;
  const SectionSpace& space;
  int count = 64;
};

std::vector<ProbeResult> probe_base_locus(const ProbeContext& ctx, std::mt19937_64& rng);
std::vector<ProbeResult> probe_separation(const ProbeContext& ctx, std::mt19937_64& rng);

struct TrialReport {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t rank = 0;
  std::int64_t h0 = 0;
  std::int64_t dim = -1;
  std::int64_t h1 = 0;
  std::vector<ProbeResult> base;
  std::vector<ProbeResult> separation;

  bool base_fired() const noexcept;
  bool separation_fired() const noexcept;
};

struct OracleReport {
  ThreefoldClass input;
  ThreefoldClass tested;  ///< sorted, zeros dropped
  Mode mode = Mode::OnAnticanonical;
  std::vector<std::uint32_t> primes;
  std::uint64_t seed = 0;
  int trials = 0;
  int probes = 0;
  bool probed = false;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::int64_t vdim = 0;
  std::int64_t edim = 0;
  /// Values of the trial attaining the minimum dim.
  std::size_t rank = 0;
  std::int64_t h0 = 0;
  std::int64_t dim = -1;
  std::int64_t h1 = 0;
  std::int64_t dim_min = -1;
  std::int64_t dim_max = -1;

  std::vector<TrialReport> runs;
  /// No base probe fired in any trial.
  bool bpf_evidence = true;
  /// Every separation probe reached rank 2 in every trial.
  bool va_evidence = true;
  /// Internal invariant violations (shape, h1 < 0, dim < edim).
  std::vector<std::string> breaches;

  bool special() const noexcept { return h1 > 0; }
};

/// Prepared trial battery: one field and one geometry per (prime, seed),
/// sampled once with enough points for every class it will test.
class Oracle {
 public:
  Oracle(FieldConfig cfg, std::size_t max_points);

  const FieldConfig& config() const noexcept { return cfg_; }
  std::size_t max_points() const noexcept { return max_points_; }

  /// Thread-safe; results do not depend on call order.
  OracleReport run(const ThreefoldClass& c, bool probes = true) const;

 private:
  struct Trial {
    PrimeField field;
    GeometrySetup geometry;
  };

  FieldConfig cfg_;
  std::size_t max_points_;
  std::vector<Trial> trials_;
};

/// One-shot wrapper around Oracle.
OracleReport dim_system(const ThreefoldClass& c, const FieldConfig& cfg = {}, bool probes = true);

/// Per-engine agreement between criteria verdicts and oracle evidence.
struct Agreement {
  bool nonspecial = true;
  bool bpf = true;
  bool very_ample = true;
  std::vector<std::string> notes;

  bool all() const noexcept { return nonspecial && bpf && very_ample; }
};

/// NS Yes needs h1 = 0 in every trial. A bpf/va verdict of true needs no
/// probe to fire; false needs some probe to fire (va only when bpf holds).
/// In general-position mode only true verdicts are checked.
Agreement compare(const Classification& cls, const OracleReport& report);

}  // namespace fatlin
