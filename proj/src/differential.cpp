#include "kronctrl/differential.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "kronctrl/controllability.hpp"
#include "kronctrl/eigenstructure.hpp"
#include "kronctrl/error.hpp"

namespace kronctrl {

InstanceGenerator::InstanceGenerator(std::uint64_t seed, std::size_t max_size) : seed_(seed), max_size_(max_size) {
  if (max_size_ == 0) throw Error("max_size must be at least 1");
}

Mat InstanceGenerator::random_matrix(std::mt19937_64& rng, std::size_t size) {
  Mat m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (rng() % 10 < 7) m(i, j) = static_cast<long>(rng() % 7) - 3;
    }
  }
  return m;
}

InputSelection InstanceGenerator::random_selection(std::mt19937_64& rng, std::size_t size) {
  // Nonempty subsets correspond to the masks 1 .. 2^size - 1.
  const std::uint64_t mask = 1 + rng() % ((std::uint64_t{1} << size) - 1);
  std::vector<std::size_t> nodes;
  for (std::size_t k = 0; k < size; ++k) {
    if (mask >> k & 1) nodes.push_back(k + 1);
  }
  return InputSelection(size, std::move(nodes));
}

RandomInstance InstanceGenerator::instance(std::size_t index) const {
  std::seed_seq seq{seed_, static_cast<std::uint64_t>(index)};
  std::mt19937_64 rng(seq);
  const std::size_t n1 = 1 + rng() % max_size_;
  const std::size_t n2 = 1 + rng() % max_size_;
  RandomInstance inst;
  inst.a1 = random_matrix(rng, n1);
  inst.a2 = random_matrix(rng, n2);
  inst.b1 = random_selection(rng, n1);
  inst.b2 = random_selection(rng, n2);
  return inst;
}

bool is_valid_witness(const RowVec& eta, const Rational& sigma, const Mat& a, const Mat& b) {
  if (eta.size() != a.rows() || eta.is_zero()) return false;
  return (eta * a) == sigma * eta && (eta * b).is_zero();
}

TrialOutcome run_trial(const RandomInstance& inst) {
  const Eigenstructure es1 = eigenstructure(inst.a1);
  const Eigenstructure es2 = eigenstructure(inst.a2);
  if (!es1.complete || !es2.complete) return {TrialStatus::skip, "irrational factor spectrum"};

  const Mat a = kron(inst.a1, inst.a2);
  const Mat b = kron(selection_matrix(inst.b1), selection_matrix(inst.b2));
  const ControllabilityReport report = check_kron(inst.a1, inst.b1, inst.a2, inst.b2);
  const bool structured = report.controllable();
  const bool kalman = kalman_oracle(a, b);
  const bool pbh = pbh_oracle(a, b);

  std::ostringstream why;
  if (report.verdict == Verdict::oracle_only) why << "structured path fell back to the oracle; ";
  if (structured != kalman) why << "collision classes say " << structured << ", Kalman says " << kalman << "; ";
  if (pbh != kalman) why << "eigenvector test says " << pbh << ", Kalman says " << kalman << "; ";
  if (!structured) {
    if (!report.witness || !report.witness_eigenvalue ||
        !is_valid_witness(*report.witness, *report.witness_eigenvalue, a, b))
      why << "missing or invalid witness; ";
  }
  if (is_diagonalizable(es1) || is_diagonalizable(es2)) {
    const auto fast = check_with_diagonalizable_factor(inst.a1, inst.b1, inst.a2, inst.b2);
    if (fast.controllable() != kalman) why << "four-condition test says " << fast.controllable() << "; ";
    if (!fast.controllable() && (!fast.witness || !is_valid_witness(*fast.witness, *fast.witness_eigenvalue, a, b)))
      why << "four-condition witness invalid; ";
  }
  const std::string detail = why.str();
  return detail.empty() ? TrialOutcome{} : TrialOutcome{TrialStatus::fail, detail};
}

std::string DifferentialSummary::str() const {
  std::ostringstream out;
  out << "trials=" << trials << " passed=" << passed << " skipped=" << skipped << " failed=" << failed;
  return out.str();
}

DifferentialSummary run_differential(std::size_t trials, std::uint64_t seed, std::size_t max_size, unsigned threads) {
  const InstanceGenerator gen(seed, max_size);
  std::vector<TrialOutcome> outcomes(trials);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));

  // Strided assignment; each slot is written by exactly one worker.
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t k = w; k < trials; k += threads) {
        try {
          outcomes[k] = run_trial(gen.instance(k));
        } catch (const std::exception& e) {
          outcomes[k] = {TrialStatus::fail, std::string("exception: ") + e.what()};
        }
      }
    });
  }
  for (auto& t : workers) t.join();

  DifferentialSummary s;
  s.trials = trials;
  for (std::size_t k = 0; k < trials; ++k) {
    switch (outcomes[k].status) {
      case TrialStatus::pass: ++s.passed; break;
      case TrialStatus::skip: ++s.skipped; break;
      case TrialStatus::fail:
        ++s.failed;
        s.failures.emplace_back(k, outcomes[k].detail);
        break;
    }
  }
  return s;
}

}  // namespace kronctrl
