#include "kronctrl/fixtures.hpp"

#include <fstream>

#include "json.hpp"
#include "kronctrl/error.hpp"
#include "kronctrl/io.hpp"

namespace kronctrl {

namespace {

Rational half(long numerator) { return Rational(numerator, 2); }

MASystem path_agents(Mat agent_input) {
  WeightedDigraph path(3);
  for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 3}}) {
    path.add_edge(a, b, 1);
    path.add_edge(b, a, 1);
  }
  Mat h{{half(3), half(1)}, {half(1), half(3)}};
  return MASystem(laplacian(path), std::move(h), InputSelection(3, {1}), std::move(agent_input));
}

InputSelection selection_from(const nlohmann::json& j, std::size_t total) {
  return InputSelection(total, j.get<std::vector<std::size_t>>());
}

ExampleCase case_from_json(const nlohmann::json& j, const std::filesystem::path& dir) {
  ExampleCase c;
  c.name = j.at("name").get<std::string>();
  c.expected = parse_verdict(j.at("expected").get<std::string>());
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "kron") {
    Mat a1 = load_matrix_or_graph(dir / j.at("first").get<std::string>()).matrix;
    Mat a2 = load_matrix_or_graph(dir / j.at("second").get<std::string>()).matrix;
    InputSelection b1 = selection_from(j.at("first_inputs"), a1.rows());
    InputSelection b2 = selection_from(j.at("second_inputs"), a2.rows());
    c.system = KronCase{std::move(a1), std::move(b1), std::move(a2), std::move(b2)};
  } else if (kind == "mas") {
    const WeightedDigraph g = load_graph(dir / j.at("graph").get<std::string>());
    c.system = MASystem(laplacian(g), load_matrix(dir / j.at("coupling").get<std::string>()),
                        selection_from(j.at("leaders"), g.node_count()),
                        load_matrix(dir / j.at("input").get<std::string>()));
  } else {
    throw Error("unknown example kind '" + kind + "'");
  }
  return c;
}

}  // namespace

Mat reference_graph_matrix() {
  return Mat{{half(17), 4, half(-1)}, {half(7), 8, half(1)}, {half(7), 3, half(11)}};
}

std::vector<ExampleCase> bundled_examples() {
  std::vector<ExampleCase> out;
  const Mat g = reference_graph_matrix();
  out.push_back({"hidden_collision", "reference graph squared, input node 2 on both factors",
                 KronCase{g, InputSelection(3, {2}), g, InputSelection(3, {2})}, Verdict::uncontrollable});

  const Mat diag_factor{{half(17), 6, half(-5)}, {half(7), 6, half(5)}, {half(7), 6, half(5)}};
  out.push_back({"defective_pair", "diagonalizable factor with a zero eigenvalue times the reference graph",
                 KronCase{diag_factor, InputSelection(3, {1, 2}), g, InputSelection::all(3)}, Verdict::controllable});

  const Mat t1{{1, 1, 2}, {0, 2, 0}, {0, 1, 3}};
  const Mat t2{{6, 1, 2}, {0, 2, 0}, {0, 5, 3}};
  out.push_back({"triangular_pair", "triangular factors with a three-way collision at 6",
                 KronCase{t1, InputSelection(3, {1, 2}), t2, InputSelection(3, {2, 3})}, Verdict::controllable});

  out.push_back({"rank_deficient_agents", "3-agent path, leader 1, rank-one agent input",
                 path_agents(Mat{{1}, {2}}), Verdict::uncontrollable});
  return out;
}

std::vector<ExampleCase> load_examples(const std::filesystem::path& dir) {
  const auto manifest = dir / "examples.json";
  std::ifstream in(manifest);
  if (!in) throw ParseError("cannot read " + manifest.string());
  std::vector<ExampleCase> out;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& entry : j) out.push_back(case_from_json(entry, dir));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(manifest.string() + ": " + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(manifest.string() + ": " + e.what());
  }
  return out;
}

ExampleResult run_example(const ExampleCase& c) {
  ExampleResult r;
  r.name = c.name;
  r.expected = c.expected;
  if (const auto* k = std::get_if<KronCase>(&c.system)) {
    r.report = check_kron(k->a1, k->b1, k->a2, k->b2);
    attach_oracle(r.report, kron(k->a1, k->a2), kron(selection_matrix(k->b1), selection_matrix(k->b2)));
  } else {
    const auto& sys = std::get<MASystem>(c.system);
    r.report = check_mas(sys);
    r.legacy = check_legacy_swarm_criterion(sys);
  }
  r.matches = r.report.verdict == r.expected && r.report.oracle_agreement.value_or(false);
  return r;
}

}  // namespace kronctrl
