#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "kronctrl/controllability.hpp"
#include "kronctrl/differential.hpp"
#include "kronctrl/eigenstructure.hpp"
#include "kronctrl/error.hpp"
#include "kronctrl/fixtures.hpp"
#include "kronctrl/io.hpp"
#include "kronctrl/linalg.hpp"
#include "kronctrl/report_json.hpp"

namespace kronctrl::cli {

namespace {

using nlohmann::json;

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
}

std::string verdict_word(bool controllable) { return controllable ? "controllable" : "uncontrollable"; }

std::string join_rationals(const RowVec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  os << "]";
  return os.str();
}

void render_report(const ControllabilityReport& r, std::ostream& out) {
  out << "verdict: " << to_string(r.verdict) << " (method " << to_string(r.method) << ")\n";
  for (const auto& c : r.classes) {
    out << "  class sigma=" << c.sigma << " dim=" << c.dimension << " rank=" << c.rank << (c.pass ? " pass" : " FAIL")
        << " pairs";
    for (const auto& [i, j] : c.members) out << " (" << i + 1 << "," << j + 1 << ")";
    out << "\n";
  }
  for (const auto& c : r.conditions) out << "  condition " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
  if (r.witness) {
    out << "  witness";
    if (r.witness_eigenvalue) out << " (sigma=" << *r.witness_eigenvalue << ")";
    out << ": " << join_rationals(*r.witness) << "\n";
  }
  if (r.oracle_controllable) {
    out << "  kalman oracle: " << verdict_word(*r.oracle_controllable);
    if (r.oracle_agreement) out << (*r.oracle_agreement ? " (agrees)" : " (DISAGREES)");
    out << "\n";
  }
  if (!r.note.empty()) out << "  note: " << r.note << "\n";
}

int exit_code(const ControllabilityReport& r, bool verify) {
  if (r.verdict == Verdict::oracle_only) return kOracleOnly;
  if (verify && r.oracle_agreement == false) return kOracleDisagreement;
  return r.controllable() ? kControllable : kUncontrollable;
}

InputSelection selection_for(const std::string& list, std::size_t nodes) {
  return InputSelection(nodes, parse_node_list(list));
}

ControllabilityReport oracle_only_report(const Mat& a, const Mat& b, const std::string& why) {
  ControllabilityReport r;
  r.verdict = Verdict::oracle_only;
  r.method = Method::kalman_oracle;
  r.oracle_controllable = kalman_oracle(a, b);
  r.note = why;
  return r;
}

json legacy_json(const LegacyVerdict& v) {
  return {{"verdict", verdict_word(v.controllable)},
          {"inner_pair_controllable", v.inner_pair_controllable},
          {"follower_pair_controllable", v.follower_pair_controllable},
          {"oracle_controllable", v.oracle_controllable},
          {"agrees_with_oracle", v.agrees_with_oracle}};
}

void render_legacy(const LegacyVerdict& v, std::ostream& out) {
  out << "two-condition criterion: " << verdict_word(v.controllable) << " (inner pair "
      << (v.inner_pair_controllable ? "pass" : "FAIL") << ", follower pair "
      << (v.follower_pair_controllable ? "pass" : "FAIL") << ")\n";
  if (!v.agrees_with_oracle)
    out << "  DISAGREES with the Kalman oracle (" << verdict_word(v.oracle_controllable)
        << "): the two conditions are not sufficient\n";
}

}  // namespace

int cmd_kron(const KronArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LoadedMatrix first = load_matrix_or_graph(args.first);
    const LoadedMatrix second = load_matrix_or_graph(args.second);
    std::string text;
    WeightedDigraph composite;
    if (first.graph && second.graph) {
      composite = kron_graph(*first.graph, *second.graph);
      text = serialize_graph(composite);
    } else {
      const Mat m = kron(first.matrix, second.matrix);
      composite = WeightedDigraph::from_adjacency(m);
      text = serialize_matrix(m);
    }
    if (args.output) {
      write_file(*args.output, text);
    } else {
      out << text;
    }
    if (args.dot) write_file(*args.dot, to_dot(composite, second.matrix.rows()));
    return kControllable;
  });
}

int cmd_eigen(const EigenArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Mat a = load_matrix_or_graph(args.input).matrix;
    const Poly p = charpoly(a);
    const Spectrum spectrum = eigenvalues(a);
    const Eigenstructure es = eigenstructure(a);

    if (args.json) {
      json j;
      j["dimension"] = a.rows();
      std::vector<std::string> coeffs;
      for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(static_cast<std::size_t>(k)).str());
      j["charpoly"] = coeffs;
      j["fully_rational"] = spectrum.fully_factored;
      j["eigenvalues"] = json::array();
      for (const auto& ev : spectrum.eigenvalues) {
        json e{{"value", ev.value.str()}, {"algebraic_multiplicity", ev.algebraic_multiplicity}};
        std::vector<std::size_t> segre;
        json chains = json::array();
        for (const auto& b : es.blocks) {
          if (b.eigenvalue != ev.value) continue;
          segre.push_back(b.size());
          json chain = json::array();
          for (const auto& v : b.chain) {
            std::vector<std::string> entries;
            for (const auto& x : v) entries.push_back(x.str());
            chain.push_back(entries);
          }
          chains.push_back(chain);
        }
        e["segre"] = segre;
        e["chains"] = chains;
        j["eigenvalues"].push_back(e);
      }
      if (spectrum.fully_factored) j["diagonalizable"] = is_diagonalizable(es);
      out << j.dump(2) << "\n";
    } else {
      out << "characteristic polynomial: " << p << "\n";
      for (const auto& ev : spectrum.eigenvalues) {
        out << "eigenvalue " << ev.value << " algebraic multiplicity " << ev.algebraic_multiplicity << "\n";
        for (const auto& b : es.blocks) {
          if (b.eigenvalue != ev.value) continue;
          out << "  Jordan block of size " << b.size() << "\n";
          for (std::size_t k = 1; k <= b.size(); ++k) out << "    v" << k << " = " << join_rationals(b.v(k)) << "\n";
        }
      }
      if (spectrum.fully_factored) {
        out << (is_diagonalizable(es) ? "diagonalizable\n" : "defective\n");
      } else {
        out << "note: the characteristic polynomial has irrational or complex roots; only rational eigenvalues are shown\n";
      }
    }
    return spectrum.fully_factored ? kControllable : kOracleOnly;
  });
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Method method = parse_method(args.method);
    if (method != Method::collision_classes && method != Method::diagonalizable_factor)
      throw Error("check supports --method theorem7 or corollary11");

    Mat a1 = load_matrix_or_graph(args.first).matrix;
    Mat a2 = load_matrix_or_graph(args.second).matrix;
    if (!a1.is_square() || !a2.is_square()) throw DimensionMismatch("factor matrices must be square");
    const InputSelection b1 = selection_for(args.first_inputs, a1.rows());
    const InputSelection b2 = selection_for(args.second_inputs, a2.rows());
    if (args.observability) {
      a1 = a1.transpose();
      a2 = a2.transpose();
    }
    const Mat a = kron(a1, a2);
    const Mat b = kron(selection_matrix(b1), selection_matrix(b2));

    ControllabilityReport report;
    if (method == Method::collision_classes) {
      report = check_kron(a1, b1, a2, b2);
    } else {
      try {
        report = check_with_diagonalizable_factor(a1, b1, a2, b2);
      } catch (const IrrationalSpectrum&) {
        report = oracle_only_report(a, b, "factor spectrum is not fully rational; verdict taken from the Kalman rank test");
      }
    }
    if (args.observability) {
      const std::string dual = "dual system: verdict refers to observability";
      report.note = report.note.empty() ? dual : dual + "; " + report.note;
    }
    if (args.verify) attach_oracle(report, a, b);

    if (args.json) {
      out << report_to_json(report).dump(2) << "\n";
    } else {
      render_report(report, out);
    }
    const int code = exit_code(report, args.verify);
    if (code == kOracleDisagreement) err << "error: structured verdict disagrees with the Kalman oracle\n";
    return code;
  });
}

int cmd_mas(const MasArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WeightedDigraph g = load_graph(args.graph);
    const MASystem sys(laplacian(g), load_matrix(args.coupling), selection_for(args.leaders, g.node_count()),
                       load_matrix(args.input));
    const ControllabilityReport report = check_mas(sys);
    const LegacyVerdict legacy = check_legacy_swarm_criterion(sys);

    if (args.json) {
      json j{{"report", report_to_json(report)},
             {"legacy", legacy_json(legacy)},
             {"criteria_disagree", legacy.controllable != report.controllable()}};
      out << j.dump(2) << "\n";
    } else {
      out << "three-condition criterion:\n";
      render_report(report, out);
      render_legacy(legacy, out);
      if (legacy.controllable != report.controllable()) out << "criteria DISAGREE\n";
    }
    const int code = exit_code(report, args.verify);
    if (code == kOracleDisagreement) err << "error: three-condition verdict disagrees with the Kalman oracle\n";
    return code;
  });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.trials == 0) throw Error("--trials must be at least 1");
    const DifferentialSummary s = run_differential(args.trials, args.seed, args.max_size, args.threads);
    if (args.json) {
      json failures = json::array();
      for (const auto& [k, why] : s.failures) failures.push_back({{"trial", k}, {"detail", why}});
      json j{{"trials", s.trials},   {"passed", s.passed},       {"skipped", s.skipped}, {"failed", s.failed},
             {"seed", args.seed},    {"max_size", args.max_size}, {"failures", failures}};
      out << j.dump(2) << "\n";
    } else {
      out << "seed=" << args.seed << " max_size=" << args.max_size << " " << s.str() << "\n";
      out << "skipped (irrational factor spectrum): " << s.skipped << " of " << s.trials << "\n";
      for (const auto& [k, why] : s.failures) out << "  trial " << k << ": " << why << "\n";
    }
    return s.failed == 0 ? 0 : 1;
  });
}

int cmd_examples(const ExamplesArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cases = args.fixtures ? load_examples(*args.fixtures) : bundled_examples();
    std::size_t matched = 0;
    json rows = json::array();
    if (!args.json) {
      out << std::left << std::setw(24) << "example" << std::setw(16) << "expected" << std::setw(16) << "verdict"
          << std::setw(16) << "kalman" << "match\n";
    }
    for (const auto& c : cases) {
      const ExampleResult r = run_example(c);
      matched += r.matches;
      const std::string oracle = r.report.oracle_controllable ? verdict_word(*r.report.oracle_controllable) : "-";
      if (args.json) {
        json row{{"name", r.name},
                 {"expected", to_string(r.expected)},
                 {"verdict", to_string(r.report.verdict)},
                 {"matches", r.matches},
                 {"report", report_to_json(r.report)}};
        if (r.legacy) row["legacy"] = legacy_json(*r.legacy);
        rows.push_back(row);
      } else {
        out << std::left << std::setw(24) << r.name << std::setw(16) << to_string(r.expected) << std::setw(16)
            << to_string(r.report.verdict) << std::setw(16) << oracle << (r.matches ? "yes" : "NO") << "\n";
        if (r.legacy)
          out << "  two-condition criterion says " << verdict_word(r.legacy->controllable)
              << (r.legacy->agrees_with_oracle ? "" : " (disagrees with the oracle)") << "\n";
      }
    }
    if (args.json) {
      out << rows.dump(2) << "\n";
    } else {
      out << matched << "/" << cases.size() << " verdicts match\n";
    }
    return matched == cases.size() ? 0 : 1;
  });
}

}  // namespace kronctrl::cli
