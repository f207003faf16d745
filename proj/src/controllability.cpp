#include "kronctrl/controllability.hpp"

#include <algorithm>

#include "kronctrl/eigenstructure.hpp"
#include "kronctrl/error.hpp"
#include "kronctrl/kron_spectral.hpp"
#include "kronctrl/linalg.hpp"

namespace kronctrl {

namespace {

void require_factor(const Mat& a, std::size_t input_rows, const char* name) {
  if (!a.is_square()) throw DimensionMismatch(std::string(name) + " must be square");
  if (input_rows != a.rows())
    throw DimensionMismatch(std::string(name) + " is " + std::to_string(a.rows()) + "x" + std::to_string(a.rows()) +
                            " but its input has " + std::to_string(input_rows) + " rows");
}

// Nonzero combination z·E with (z·E)·B = 0, assuming rank(E·B) < rows(E).
RowVec annihilated_combination(const Mat& basis, const Mat& projected) {
  const auto kernel = left_null_space(projected);
  return kernel.front() * basis;
}

bool has_zero_eigenvalue(const Mat& a) { return rank(a) < a.rows(); }

const JordanBlockChain* block_with_eigenvalue(const Eigenstructure& es, const Rational& value) {
  for (const auto& b : es.blocks) {
    if (b.eigenvalue == value) return &b;
  }
  return nullptr;
}

std::size_t first_unselected(const InputSelection& s) {
  for (std::size_t node = 1; node <= s.total_nodes(); ++node) {
    if (!std::binary_search(s.actuated().begin(), s.actuated().end(), node)) return node;
  }
  return 0;
}

void set_witness(ControllabilityReport& r, RowVec v, const Rational& sigma) {
  if (r.witness) return;
  r.witness = std::move(v);
  r.witness_eigenvalue = sigma;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::controllable: return "controllable";
    case Verdict::uncontrollable: return "uncontrollable";
    case Verdict::oracle_only: return "oracle_only";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::collision_classes: return "theorem7";
    case Method::diagonalizable_factor: return "corollary11";
    case Method::multi_agent: return "corollary12";
    case Method::kalman_oracle: return "kalman_oracle";
  }
  return "?";
}

Verdict parse_verdict(std::string_view s) {
  for (auto v : {Verdict::controllable, Verdict::uncontrollable, Verdict::oracle_only}) {
    if (to_string(v) == s) return v;
  }
  throw Error("unknown verdict '" + std::string(s) + "'");
}

Method parse_method(std::string_view s) {
  for (auto m : {Method::collision_classes, Method::diagonalizable_factor, Method::multi_agent, Method::kalman_oracle}) {
    if (to_string(m) == s) return m;
  }
  throw Error("unknown method '" + std::string(s) + "'");
}

bool kalman_oracle(const Mat& a, const Mat& b) {
  require_factor(a, b.rows(), "state matrix");
  const std::size_t n = a.rows();
  if (n == 0) return true;
  // Grow the Krylov sequence until it spans R^n or stops growing.
  std::vector<RowVec> columns;
  Mat block = b;
  std::size_t last_rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t c = 0; c < block.cols(); ++c) columns.push_back(block.col(c));
    const std::size_t r = span_rank(columns);
    if (r == n) return true;
    if (k > 0 && r == last_rank) return false;
    last_rank = r;
    block = a * block;
  }
  return false;
}

std::optional<ModeWitness> pbh_witness(const Mat& a, const Mat& b) {
  require_factor(a, b.rows(), "state matrix");
  const Spectrum spectrum = eigenvalues(a);
  if (!spectrum.fully_factored) throw IrrationalSpectrum("eigenvector test needs a fully rational spectrum");
  for (const auto& ev : spectrum.eigenvalues) {
    const auto space = brute_eigenspace(a, ev.value);
    const Mat e = Mat::from_rows(space, a.rows());
    const Mat projected = e * b;
    if (rank(projected) < space.size()) return ModeWitness{ev.value, annihilated_combination(e, projected)};
  }
  return std::nullopt;
}

bool pbh_oracle(const Mat& a, const Mat& b) { return !pbh_witness(a, b).has_value(); }

ControllabilityReport check_kron(const Mat& a1, const Mat& b1, const Mat& a2, const Mat& b2) {
  require_factor(a1, b1.rows(), "first factor");
  require_factor(a2, b2.rows(), "second factor");

  ControllabilityReport report;
  const Eigenstructure es1 = eigenstructure(a1);
  const Eigenstructure es2 = eigenstructure(a2);
  if (!es1.complete || !es2.complete) {
    report.verdict = Verdict::oracle_only;
    report.method = Method::kalman_oracle;
    report.note = "factor spectrum is not fully rational; verdict taken from the Kalman rank test";
    report.oracle_controllable = kalman_oracle(kron(a1, a2), kron(b1, b2));
    return report;
  }

  report.method = Method::collision_classes;
  const Mat b = kron(b1, b2);
  const std::size_t dim = a1.rows() * a2.rows();
  bool all_pass = true;
  for (auto& cls : collision_classes(es1, es2)) {
    const Mat e = Mat::from_rows(cls.basis, dim);
    const Mat projected = e * b;
    ClassEvidence ev{cls.product, cls.basis.size(), rank(projected), false, std::move(cls.members)};
    ev.pass = ev.rank == ev.dimension;
    if (!ev.pass) {
      all_pass = false;
      set_witness(report, annihilated_combination(e, projected), cls.product);
    }
    report.classes.push_back(std::move(ev));
  }
  report.verdict = all_pass ? Verdict::controllable : Verdict::uncontrollable;
  return report;
}

ControllabilityReport check_kron(const Mat& a1, const InputSelection& b1, const Mat& a2, const InputSelection& b2) {
  require_factor(a1, b1.total_nodes(), "first factor");
  require_factor(a2, b2.total_nodes(), "second factor");
  return check_kron(a1, selection_matrix(b1), a2, selection_matrix(b2));
}

ControllabilityReport check_with_diagonalizable_factor(const Mat& a1, const InputSelection& b1, const Mat& a2,
                                                       const InputSelection& b2) {
  require_factor(a1, b1.total_nodes(), "first factor");
  require_factor(a2, b2.total_nodes(), "second factor");
  const Eigenstructure es1 = complete_eigenstructure(a1);
  const Eigenstructure es2 = complete_eigenstructure(a2);
  if (!is_diagonalizable(es1) && !is_diagonalizable(es2))
    throw NeitherFactorDiagonalizable("neither factor matrix is diagonalizable");

  const Mat s1 = selection_matrix(b1);
  const Mat s2 = selection_matrix(b2);
  ControllabilityReport report;
  report.method = Method::diagonalizable_factor;

  // 1. Factor pairs. An uncontrollable factor mode v pairs with any
  //    eigenvector of the other factor into a composite witness.
  bool factors_ok = true;
  if (a1.rows() > 0 && a2.rows() > 0) {
    if (auto m = pbh_witness(a1, s1)) {
      factors_ok = false;
      const auto& w = es2.blocks.front();
      set_witness(report, kron(m->vector, w.chain.front()), m->eigenvalue * w.eigenvalue);
    }
    if (auto m = pbh_witness(a2, s2)) {
      factors_ok = false;
      const auto& v = es1.blocks.front();
      set_witness(report, kron(v.chain.front(), m->vector), v.eigenvalue * m->eigenvalue);
    }
  }
  report.conditions.push_back({"factor_pairs_controllable", factors_ok});

  // 2./3. A zero eigenvalue on one side needs full actuation on the other.
  //    Otherwise v⊗e_k (k unactuated) is a zero-mode witness.
  const JordanBlockChain* zero1 = block_with_eigenvalue(es1, Rational(0));
  const JordanBlockChain* zero2 = block_with_eigenvalue(es2, Rational(0));
  const bool second_full_ok = zero1 == nullptr || b2.is_full();
  const bool first_full_ok = zero2 == nullptr || b1.is_full();
  if (!second_full_ok)
    set_witness(report, kron(zero1->chain.front(), RowVec::unit(a2.rows(), first_unselected(b2))), Rational(0));
  if (!first_full_ok)
    set_witness(report, kron(RowVec::unit(a1.rows(), first_unselected(b1)), zero2->chain.front()), Rational(0));
  report.conditions.push_back({"zero_eigenvalue_first_needs_full_second_selection", second_full_ok});
  report.conditions.push_back({"zero_eigenvalue_second_needs_full_first_selection", first_full_ok});

  // 4. Shared nonzero products: projected top-vector tensors independent.
  bool products_ok = true;
  const std::size_t dim = a1.rows() * a2.rows();
  for (auto& cls : collision_classes(es1, es2)) {
    if (cls.product.is_zero() || cls.members.size() < 2) continue;
    std::vector<RowVec> eigvecs;
    std::vector<RowVec> projected;
    for (const auto& [i, j] : cls.members) {
      const RowVec& v = es1.blocks[i].chain.front();
      const RowVec& w = es2.blocks[j].chain.front();
      eigvecs.push_back(kron(v, w));
      projected.push_back(kron(v * s1, w * s2));
    }
    const Mat pm = Mat::from_rows(projected, b1.size() * b2.size());
    ClassEvidence ev{cls.product, cls.members.size(), rank(pm), false, std::move(cls.members)};
    ev.pass = ev.rank == ev.dimension;
    if (!ev.pass) {
      products_ok = false;
      set_witness(report, annihilated_combination(Mat::from_rows(eigvecs, dim), pm), cls.product);
    }
    report.classes.push_back(std::move(ev));
  }
  report.conditions.push_back({"shared_products_independent", products_ok});

  const bool ok = factors_ok && second_full_ok && first_full_ok && products_ok;
  report.verdict = ok ? Verdict::controllable : Verdict::uncontrollable;
  return report;
}

std::vector<ConditionCheck> necessary_screens(const Mat& a1, const InputSelection& b1, const Mat& a2,
                                              const InputSelection& b2) {
  require_factor(a1, b1.total_nodes(), "first factor");
  require_factor(a2, b2.total_nodes(), "second factor");
  return {
      {"first_factor_controllable", kalman_oracle(a1, selection_matrix(b1))},
      {"second_factor_controllable", kalman_oracle(a2, selection_matrix(b2))},
      {"zero_eigenvalue_first_needs_full_second_selection", !has_zero_eigenvalue(a1) || b2.is_full()},
      {"zero_eigenvalue_second_needs_full_first_selection", !has_zero_eigenvalue(a2) || b1.is_full()},
  };
}

ControllabilityReport check_mas(const MASystem& sys) {
  const Mat& l = sys.laplacian();
  const Mat& h = sys.inner_coupling();
  const Mat& b = sys.agent_input();
  const Mat delta = selection_matrix(sys.leaders());

  ControllabilityReport report;
  report.method = Method::multi_agent;
  const bool leaders_ok = kalman_oracle(l, delta);
  const bool input_rank_ok = rank(b) == sys.agent_dimension();
  const bool zero_mode_ok = !has_zero_eigenvalue(h) || sys.leaders().is_full();
  report.conditions = {
      {"laplacian_leader_pair_controllable", leaders_ok},
      {"agent_input_full_row_rank", input_rank_ok},
      {"singular_inner_coupling_needs_all_leaders", zero_mode_ok},
  };
  report.verdict = leaders_ok && input_rank_ok && zero_mode_ok ? Verdict::controllable : Verdict::uncontrollable;

  if (!report.controllable()) {
    // Constructive evidence from the factor chains when they are rational.
    const ControllabilityReport structured = check_kron(Rational(-1) * l, delta, h, b);
    if (structured.witness) {
      report.witness = structured.witness;
      report.witness_eigenvalue = structured.witness_eigenvalue;
    }
  }
  attach_oracle(report, sys.state_matrix(), sys.input_matrix());
  return report;
}

LegacyVerdict check_legacy_swarm_criterion(const MASystem& sys) {
  const Mat& l = sys.laplacian();
  const std::size_t n = l.rows();
  std::vector<std::size_t> leaders;
  std::vector<std::size_t> followers;
  for (std::size_t node = 1; node <= n; ++node) {
    const bool is_leader = std::binary_search(sys.leaders().actuated().begin(), sys.leaders().actuated().end(), node);
    (is_leader ? leaders : followers).push_back(node - 1);
  }
  Mat l_ff(followers.size(), followers.size());
  Mat l_fl(followers.size(), leaders.size());
  for (std::size_t i = 0; i < followers.size(); ++i) {
    for (std::size_t j = 0; j < followers.size(); ++j) l_ff(i, j) = l(followers[i], followers[j]);
    for (std::size_t j = 0; j < leaders.size(); ++j) l_fl(i, j) = l(followers[i], leaders[j]);
  }

  LegacyVerdict v;
  v.inner_pair_controllable = kalman_oracle(sys.inner_coupling(), sys.agent_input());
  v.follower_pair_controllable = kalman_oracle(l_ff, l_fl);
  v.controllable = v.inner_pair_controllable && v.follower_pair_controllable;
  v.oracle_controllable = kalman_oracle(sys.state_matrix(), sys.input_matrix());
  v.agrees_with_oracle = v.controllable == v.oracle_controllable;
  return v;
}

ControllabilityReport check_observability_dual(const Mat& a1, const InputSelection& c1, const Mat& a2,
                                               const InputSelection& c2) {
  ControllabilityReport r = check_kron(a1.transpose(), c1, a2.transpose(), c2);
  r.note = r.note.empty() ? "dual system: verdict refers to observability"
                          : "dual system: verdict refers to observability; " + r.note;
  return r;
}

ControllabilityReport check_observability_dual(const Mat& a, const InputSelection& c) {
  return check_observability_dual(a, c, Mat::identity(1), InputSelection::all(1));
}

void attach_oracle(ControllabilityReport& report, const Mat& a, const Mat& b) {
  const bool oracle = kalman_oracle(a, b);
  report.oracle_controllable = oracle;
  if (report.verdict != Verdict::oracle_only) report.oracle_agreement = report.controllable() == oracle;
}

}  // namespace kronctrl
