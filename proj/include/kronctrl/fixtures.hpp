#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kronctrl/controllability.hpp"
#include "kronctrl/graph.hpp"
#include "kronctrl/matrix.hpp"

namespace kronctrl {

/// Composite (A1⊗A2, B1⊗B2) given by its factors.
struct KronCase {
  Mat a1;
  InputSelection b1;
  Mat a2;
  InputSelection b2;
};

struct ExampleCase {
  std::string name;
  std::string description;
  std::variant<KronCase, MASystem> system;
  Verdict expected = Verdict::controllable;
};

/// The four reference systems shipped with the tool:
///   hidden_collision       3-node graph squared, one input node per factor;
///                          both factor pairs are controllable but a shared
///                          eigenvalue product is not
///   defective_pair         diagonalizable factor with a zero eigenvalue
///                          times a defective factor, controllable
///   triangular_pair        two triangular factors with a three-way
///                          eigenvalue collision at 6, controllable
///   rank_deficient_agents  leader-follower path whose agent input matrix
///                          is rank one; the two-condition criterion
///                          wrongly accepts it
std::vector<ExampleCase> bundled_examples();

/// Matrix of the 3-node reference graph.
Mat reference_graph_matrix();

/// Reads the same cases from `dir/examples.json` and the files it names.
/// Throws ParseError for a missing or malformed manifest or data file.
std::vector<ExampleCase> load_examples(const std::filesystem::path& dir);

struct ExampleResult {
  std::string name;
  Verdict expected = Verdict::controllable;
  ControllabilityReport report;
  /// Only for leader-follower cases.
  std::optional<LegacyVerdict> legacy;
  bool matches = false;
};

/// Runs the structured check (with the Kalman oracle attached) and compares
/// against the expected verdict. A disagreement with the oracle counts as a
/// mismatch.
ExampleResult run_example(const ExampleCase& c);

}  // namespace kronctrl
