#pragma once

// Inequality classifiers for L3(d; m) on X_r (points on the anticanonical
// curve of a smooth quadric) and the reduction certificates that replay the
// inductions behind them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fatlin/divclass.hpp"

namespace fatlin {

enum class Tri { Yes, No, Unknown };
enum class Mode { OnAnticanonical, GeneralPosition };
enum class Goal { NS, BPF, VA };

std::string_view to_string(Tri t) noexcept;
std::string_view to_string(Mode m) noexcept;
std::string_view to_string(Goal g) noexcept;
std::optional<Mode> parse_mode(std::string_view s);
std::optional<Goal> parse_goal(std::string_view s);

/// Number of points from which each sum condition is enforced.
inline constexpr std::size_t kNsSumMinPoints = 9;
inline constexpr std::size_t kBpfSumMinPoints = 7;
inline constexpr std::size_t kVaSumMinPoints = 9;

/// One evaluated inequality, e.g. "4d=20 >= sum(m)+3=20".
struct Condition {
  std::string label;  ///< "(H)", "(1)", "(2)", "(3)"
  std::string text;
  bool applies = true;
  bool holds = true;
};

struct NonspecialVerdict {
  Tri value = Tri::Unknown;
  std::string reason;
  std::vector<Condition> conditions;
};

struct BoolVerdict {
  bool value = false;
  /// false in general-position mode: a true verdict is sufficient only.
  bool exact = true;
  std::vector<Condition> conditions;
};

/// Sufficient test for h^1 = 0. Mults are sorted and zeros dropped first.
/// Returns Yes or Unknown, never No.
NonspecialVerdict nonspecial_verdict(const ThreefoldClass& c);
/// Mults are sorted; zeros are kept and count towards r.
BoolVerdict bpf_verdict(const ThreefoldClass& c, Mode mode = Mode::OnAnticanonical);
BoolVerdict very_ample_verdict(const ThreefoldClass& c, Mode mode = Mode::OnAnticanonical);

Tri check_nonspecial(const ThreefoldClass& c);
bool check_bpf(const ThreefoldClass& c);
bool check_very_ample(const ThreefoldClass& c);

enum class ZeroPolicy { Drop, Keep };

struct Classification {
  ThreefoldClass input;
  ThreefoldClass tested;  ///< sorted, zeros dropped unless ZeroPolicy::Keep
  Mode mode = Mode::OnAnticanonical;
  NonspecialVerdict nonspecial;
  BoolVerdict bpf;
  BoolVerdict very_ample;
  std::vector<std::string> warnings;
};

Classification classify(const ThreefoldClass& c, Mode mode = Mode::OnAnticanonical,
                        ZeroPolicy zeros = ZeroPolicy::Drop);

/// Outcome of the K-intersection predicate on a restricted plane class.
struct SurfaceCheck {
  Goal kind = Goal::NS;
  PlaneClass cls;
  Reduction reduction;
  std::int64_t k_intersection = 0;  ///< cls . K
  std::string threshold;
  bool standard = false;
  bool holds = false;
};

/// NS: standard and c.K <= 0.  BPF: standard and c.K <= -2.
/// VA: standard and c.(-K) >= 3.
SurfaceCheck evaluate_surface_predicate(const PlaneClass& c, Goal kind);
bool surface_predicate(const PlaneClass& c, Goal kind);

struct SideCheck {
  std::string name;
  ThreefoldClass cls;
  bool holds = false;
};

struct CertificateStep {
  ThreefoldClass current;
  std::string branch;
  SurfaceCheck surface;  ///< on the restriction to Q_r, already converted to B_{r+1}
  ThreefoldClass residual;  ///< as produced by the exact sequence, zeros kept
  std::vector<SideCheck> side_checks;
  bool ok = false;
};

enum class CertificateStatus { Succeeded, Failed };

struct Certificate {
  Goal goal = Goal::NS;
  ThreefoldClass input;
  ThreefoldClass start;  ///< normalized input the induction runs on
  std::vector<SideCheck> preliminary;
  std::vector<CertificateStep> steps;
  ThreefoldClass terminal;
  std::string terminal_rule;
  bool terminal_ok = false;
  CertificateStatus status = CertificateStatus::Failed;
  /// 1-based index of the first failing step; 0 means the failure is outside
  /// the step list (preliminary checks or terminal).
  std::size_t failed_step = 0;
  std::string failure;
  /// Non-fatal observations, e.g. a restricted class that is not standard.
  std::vector<std::string> findings;

  bool succeeded() const noexcept { return status == CertificateStatus::Succeeded; }
};

Certificate build_certificate(const ThreefoldClass& c, Goal goal);

/// Re-derives the structural invariants of a certificate: residual chaining,
/// restriction formulas, K-intersections and per-move Cremona invariance.
/// Returns a list of violations (empty when consistent).
std::vector<std::string> audit_certificate(const Certificate& cert);

}  // namespace fatlin
