// kronctrl: controllability and observability of Kronecker product networks.
//
//   kronctrl kron G1 G2 [-o OUT] [--dot PATH]
//   kronctrl eigen FILE [--json]
//   kronctrl check A1 A2 --inputs1 1,2 --inputs2 2,3 [--method theorem7|corollary11]
//                        [--observability] [--verify] [--json]
//   kronctrl mas GRAPH H B --leaders 1 [--verify] [--json]
//   kronctrl verify [--trials N] [--seed N] [--max-size N] [--threads N] [--json]
//   kronctrl examples [--fixtures DIR] [--json]
//
// Exit codes: 0 controllable, 1 uncontrollable, 2 input error, 3 only the
// Kalman fallback could decide, 4 structured verdict disagrees with Kalman.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace kronctrl::cli;

  CLI::App app{"Exact controllability analysis of Kronecker product networks", "kronctrl"};
  app.require_subcommand(1);

  KronArgs kron;
  auto* kron_cmd = app.add_subcommand("kron", "Kronecker product of two graphs or matrices");
  kron_cmd->add_option("first", kron.first, "first factor (graph or matrix file)")->required();
  kron_cmd->add_option("second", kron.second, "second factor (graph or matrix file)")->required();
  kron_cmd->add_option("-o,--output", kron.output, "write the composite here instead of stdout");
  kron_cmd->add_option("--dot", kron.dot, "also write a DOT rendering of the composite");

  EigenArgs eigen;
  auto* eigen_cmd = app.add_subcommand("eigen", "Exact eigenvalues and left Jordan chains");
  eigen_cmd->add_option("input", eigen.input, "graph or matrix file")->required();
  eigen_cmd->add_flag("--json", eigen.json, "machine-readable output");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide controllability of (A1 x A2, B1 x B2)");
  check_cmd->add_option("first", check.first, "first factor (graph or matrix file)")->required();
  check_cmd->add_option("second", check.second, "second factor (graph or matrix file)")->required();
  check_cmd->add_option("--inputs1", check.first_inputs, "actuated nodes of the first factor, e.g. 1,2")->required();
  check_cmd->add_option("--inputs2", check.second_inputs, "actuated nodes of the second factor")->required();
  check_cmd->add_option("--method", check.method, "theorem7 (any factors) or corollary11 (one factor diagonalizable)")
      ->check(CLI::IsMember({"theorem7", "corollary11"}));
  check_cmd->add_flag("--observability", check.observability, "node lists are measured nodes; decide observability");
  check_cmd->add_flag("--verify", check.verify, "cross-check with the Kalman rank test");
  check_cmd->add_flag("--json", check.json, "print the report as JSON");

  MasArgs mas;
  auto* mas_cmd = app.add_subcommand("mas", "Leader-follower multi-agent system (-L x H, D x B)");
  mas_cmd->add_option("graph", mas.graph, "interaction graph file (no self-loops)")->required();
  mas_cmd->add_option("coupling", mas.coupling, "inner coupling matrix H")->required();
  mas_cmd->add_option("input", mas.input, "agent input matrix B")->required();
  mas_cmd->add_option("--leaders", mas.leaders, "leader nodes, e.g. 1")->required();
  mas_cmd->add_flag("--verify", mas.verify, "fail with exit 4 if the Kalman rank test disagrees");
  mas_cmd->add_flag("--json", mas.json, "print the reports as JSON");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Differential test against the Kalman and eigenvector oracles");
  verify_cmd->add_option("--trials", verify.trials, "number of random instances")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed, "random seed");
  verify_cmd->add_option("--max-size", verify.max_size, "largest factor dimension")->check(CLI::Range(1, 6));
  verify_cmd->add_option("--threads", verify.threads, "worker threads (0 = all cores)");
  verify_cmd->add_flag("--json", verify.json, "machine-readable summary");

  ExamplesArgs examples;
  auto* examples_cmd = app.add_subcommand("examples", "Run the bundled reference systems");
  examples_cmd->add_option("--fixtures", examples.fixtures, "directory holding examples.json and its data files");
  examples_cmd->add_flag("--json", examples.json, "machine-readable results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*kron_cmd) return cmd_kron(kron, std::cout, std::cerr);
  if (*eigen_cmd) return cmd_eigen(eigen, std::cout, std::cerr);
  if (*check_cmd) return cmd_check(check, std::cout, std::cerr);
  if (*mas_cmd) return cmd_mas(mas, std::cout, std::cerr);
  if (*verify_cmd) return cmd_verify(verify, std::cout, std::cerr);
  return cmd_examples(examples, std::cout, std::cerr);
}
