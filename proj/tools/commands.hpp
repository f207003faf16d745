#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace kronctrl::cli {

/// Process exit codes.
enum ExitCode : int {
  kControllable = 0,
  kUncontrollable = 1,
  kInputError = 2,
  kOracleOnly = 3,
  kOracleDisagreement = 4,
};

struct KronArgs {
  std::filesystem::path first;
  std::filesystem::path second;
  std::optional<std::filesystem::path> output;  ///< stdout when unset
  std::optional<std::filesystem::path> dot;
};

struct EigenArgs {
  std::filesystem::path input;
  bool json = false;
};

struct CheckArgs {
  std::filesystem::path first;
  std::filesystem::path second;
  std::string first_inputs;   ///< node list such as "1,2"
  std::string second_inputs;
  std::string method = "theorem7";  ///< or "corollary11"
  bool observability = false;       ///< treat the lists as measured nodes
  bool verify = false;
  bool json = false;
};

struct MasArgs {
  std::filesystem::path graph;
  std::filesystem::path coupling;
  std::filesystem::path input;
  std::string leaders;
  bool verify = false;
  bool json = false;
};

struct VerifyArgs {
  std::size_t trials = 200;
  std::uint64_t seed = 7;
  std::size_t max_size = 3;
  unsigned threads = 0;
  bool json = false;
};

struct ExamplesArgs {
  std::optional<std::filesystem::path> fixtures;  ///< bundled data when unset
  bool json = false;
};

// Each command writes results to `out` and diagnostics to `err`, and
// returns the process exit code. Library errors are reported here as
// kInputError rather than propagated.
int cmd_kron(const KronArgs& args, std::ostream& out, std::ostream& err);
int cmd_eigen(const EigenArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_mas(const MasArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_examples(const ExamplesArgs& args, std::ostream& out, std::ostream& err);

}  // namespace kronctrl::cli
