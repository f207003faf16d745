#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kronctrl/graph.hpp"
#include "kronctrl/matrix.hpp"

namespace kronctrl {

/// A random factor pair with input selections.
struct RandomInstance {
  Mat a1;
  InputSelection b1;
  Mat a2;
  InputSelection b2;
};

/// Deterministic source of random instances. Instance k depends only on
/// (seed, k), so trials can run in any order.
///
/// Factor sizes are uniform in [1, max_size]; each entry is nonzero with
/// probability 0.7 and then uniform in [-3, 3]; selections are uniform
/// nonempty subsets.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed, std::size_t max_size = 3);

  RandomInstance instance(std::size_t index) const;

  static Mat random_matrix(std::mt19937_64& rng, std::size_t size);
  static InputSelection random_selection(std::mt19937_64& rng, std::size_t size);

 private:
  std::uint64_t seed_;
  std::size_t max_size_;
};

enum class TrialStatus { pass, skip, fail };

struct TrialOutcome {
  TrialStatus status = TrialStatus::pass;
  std::string detail;  ///< why a trial failed or was skipped
};

/// Cross-checks one instance. Skips when a factor spectrum is not rational.
/// Otherwise fails unless
///   * the collision-class verdict, the Kalman rank test and the eigenvector
///     test on the composite all agree,
///   * the four-condition verdict agrees too whenever a factor is
///     diagonalizable,
///   * an uncontrollable verdict carries a valid witness.
TrialOutcome run_trial(const RandomInstance& inst);

struct DifferentialSummary {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  /// (trial index, detail) in index order.
  std::vector<std::pair<std::size_t, std::string>> failures;

  /// One line, byte-identical for identical inputs.
  std::string str() const;
};

/// Runs trials 0..trials-1 of InstanceGenerator(seed, max_size), spread over
/// `threads` workers (0 picks the hardware concurrency).
DifferentialSummary run_differential(std::size_t trials, std::uint64_t seed, std::size_t max_size = 3,
                                     unsigned threads = 0);

/// True when η ≠ 0, η·a = σ·η and η·b = 0.
bool is_valid_witness(const RowVec& eta, const Rational& sigma, const Mat& a, const Mat& b);

}  // namespace kronctrl
