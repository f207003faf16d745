#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kronctrl/graph.hpp"
#include "kronctrl/matrix.hpp"
#include "kronctrl/rational.hpp"

namespace kronctrl {

enum class Verdict { controllable, uncontrollable, oracle_only };

/// Which decision procedure produced a report.
enum class Method {
  collision_classes,      ///< eigenspace rank test over every product class
  diagonalizable_factor,  ///< four-condition test, one factor diagonalizable
  multi_agent,            ///< three-condition leader-follower test
  kalman_oracle,          ///< fallback when the structured path cannot run
};

/// Wire names used in JSON reports.
std::string_view to_string(Verdict v);
std::string_view to_string(Method m);
/// Throw Error on unknown names.
Verdict parse_verdict(std::string_view s);
Method parse_method(std::string_view s);

struct ClassEvidence {
  Rational sigma;
  std::size_t dimension = 0;
  std::size_t rank = 0;
  bool pass = false;
  std::vector<std::pair<std::size_t, std::size_t>> members;  ///< 0-based block indices

  friend bool operator==(const ClassEvidence&, const ClassEvidence&) = default;
};

struct ConditionCheck {
  std::string name;
  bool pass = false;

  friend bool operator==(const ConditionCheck&, const ConditionCheck&) = default;
};

struct ControllabilityReport {
  Verdict verdict = Verdict::oracle_only;
  Method method = Method::kalman_oracle;
  std::vector<ClassEvidence> classes;
  std::vector<ConditionCheck> conditions;
  /// Nonzero η with η·A = σ·η and η·B = 0, present only when uncontrollable.
  std::optional<RowVec> witness;
  std::optional<Rational> witness_eigenvalue;
  /// Kalman verdict on the full composite, when it was computed.
  std::optional<bool> oracle_controllable;
  /// Structured verdict == oracle verdict; unset for oracle-only reports.
  std::optional<bool> oracle_agreement;
  std::string note;

  bool controllable() const noexcept { return verdict == Verdict::controllable; }

  friend bool operator==(const ControllabilityReport&, const ControllabilityReport&) = default;
};

/// rank [B, AB, ..., A^{n-1}B] == n, exactly. Needs no eigenvalues.
bool kalman_oracle(const Mat& a, const Mat& b);

/// An uncontrollable mode: left eigenvector orthogonal to the input matrix.
struct ModeWitness {
  Rational eigenvalue;
  RowVec vector;
};

/// First left eigenvector η of `a` (ascending eigenvalue) with η·b = 0, or
/// nullopt when (a, b) is controllable. Throws IrrationalSpectrum.
std::optional<ModeWitness> pbh_witness(const Mat& a, const Mat& b);

/// Eigenvector test: for every eigenvalue σ of `a`, the left σ-eigenspace
/// basis E must satisfy rank(E·b) = rows(E). Throws IrrationalSpectrum.
bool pbh_oracle(const Mat& a, const Mat& b);

/// Controllability of (A1⊗A2, B1⊗B2) from the factors' Jordan chains: every
/// class of block pairs with a common eigenvalue product must have its
/// lifted eigenspace basis E satisfy rank(E·B) = rows(E). Falls back to the
/// Kalman oracle (verdict oracle_only) when a factor spectrum is not rational.
/// Throws DimensionMismatch.
ControllabilityReport check_kron(const Mat& a1, const InputSelection& b1, const Mat& a2, const InputSelection& b2);

/// Same test with arbitrary input matrices instead of node selections.
ControllabilityReport check_kron(const Mat& a1, const Mat& b1, const Mat& a2, const Mat& b2);

/// Four-condition test for the case where at least one factor is
/// diagonalizable:
///   1. both factor pairs controllable;
///   2. 0 ∈ σ(A1) implies B2 selects every node;
///   3. 0 ∈ σ(A2) implies B1 selects every node;
///   4. for each nonzero product shared by several block pairs, the vectors
///      (v_i·B1)⊗(w_j·B2) built from the top chain vectors are independent.
/// Throws NeitherFactorDiagonalizable, IrrationalSpectrum, DimensionMismatch.
ControllabilityReport check_with_diagonalizable_factor(const Mat& a1, const InputSelection& b1, const Mat& a2,
                                                       const InputSelection& b2);

/// Cheap necessary conditions. A failing screen proves the composite
/// uncontrollable without forming it.
std::vector<ConditionCheck> necessary_screens(const Mat& a1, const InputSelection& b1, const Mat& a2,
                                              const InputSelection& b2);

/// Leader-follower system (-L⊗H, Δ⊗B) is controllable iff
///   1. (L, Δ) is controllable;
///   2. rank(B) = n;
///   3. 0 ∈ σ(H) implies every agent is a leader.
/// The report always carries the Kalman verdict on the composite.
ControllabilityReport check_mas(const MASystem& sys);

/// The earlier two-condition criterion: (H, B) controllable and
/// (L_ff, L_fl) controllable, with leaders permuted to the front. It is
/// necessary but not sufficient; `agrees_with_oracle` exposes the gap.
struct LegacyVerdict {
  bool controllable = false;
  bool inner_pair_controllable = false;
  bool follower_pair_controllable = false;
  bool oracle_controllable = false;
  bool agrees_with_oracle = false;
};
LegacyVerdict check_legacy_swarm_criterion(const MASystem& sys);

/// Observability of (A1⊗A2, C1⊗C2) with C_k = selection_matrix(c_k)ᵀ,
/// decided as controllability of the transposed system. In the returned
/// report "controllable" reads as "observable".
ControllabilityReport check_observability_dual(const Mat& a1, const InputSelection& c1, const Mat& a2,
                                               const InputSelection& c2);
/// Single-matrix form: observability of (A, C).
ControllabilityReport check_observability_dual(const Mat& a, const InputSelection& c);

/// Runs the Kalman oracle on (a, b) and records the verdict and agreement.
void attach_oracle(ControllabilityReport& report, const Mat& a, const Mat& b);

}  // namespace kronctrl
