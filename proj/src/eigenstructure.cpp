#include "kronctrl/eigenstructure.hpp"

#include <string>

#include "kronctrl/error.hpp"
#include "kronctrl/linalg.hpp"

namespace kronctrl {

namespace {

// Left null spaces of (A - λI)^k for k = 0, 1, ... until the dimension
// stops growing. spaces[0] is empty.
std::vector<std::vector<RowVec>> nested_left_kernels(const Mat& a, const Rational& lambda) {
  const Mat m = shift(a, lambda);
  std::vector<std::vector<RowVec>> spaces{{}};
  Mat power = Mat::identity(a.rows());
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    power = power * m;
    auto space = left_null_space(power);
    if (space.size() == spaces.back().size()) break;
    spaces.push_back(std::move(space));
  }
  return spaces;
}

std::vector<std::size_t> sizes_from_dims(const std::vector<std::vector<RowVec>>& spaces) {
  // blocks of size >= k: dim N_k - dim N_{k-1}
  std::vector<std::size_t> at_least(spaces.size() + 1, 0);
  for (std::size_t k = 1; k < spaces.size(); ++k) at_least[k] = spaces[k].size() - spaces[k - 1].size();
  std::vector<std::size_t> sizes;
  for (std::size_t k = spaces.size() - 1; k >= 1; --k) {
    for (std::size_t c = at_least[k + 1]; c < at_least[k]; ++c) sizes.push_back(k);
  }
  return sizes;
}

}  // namespace

Spectrum eigenvalues(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("eigenvalues need a square matrix");
  Spectrum s;
  if (a.rows() == 0) {
    s.fully_factored = true;
    return s;
  }
  const RationalRoots roots = rational_roots(charpoly(a));
  for (const auto& r : roots.roots) s.eigenvalues.push_back({r.value, r.multiplicity});
  s.fully_factored = roots.fully_factored;
  return s;
}

std::vector<std::size_t> segre_characteristic(const Mat& a, const Rational& lambda) {
  if (!a.is_square()) throw DimensionMismatch("Jordan structure needs a square matrix");
  return sizes_from_dims(nested_left_kernels(a, lambda));
}

std::vector<JordanBlockChain> left_jordan_chains(const Mat& a, const Rational& lambda) {
  if (!a.is_square()) throw DimensionMismatch("Jordan chains need a square matrix");
  const auto spaces = nested_left_kernels(a, lambda);
  if (spaces.size() < 2) throw NotAnEigenvalue(lambda.str() + " is not an eigenvalue");
  const Mat m = shift(a, lambda);
  const std::size_t top = spaces.size() - 1;

  std::vector<std::size_t> at_least(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) at_least[k] = spaces[k].size() - spaces[k - 1].size();

  std::vector<JordanBlockChain> blocks;
  for (std::size_t grade = top; grade >= 1; --grade) {
    const std::size_t needed = at_least[grade] - at_least[grade + 1];
    if (needed == 0) continue;

    // Everything already accounted for at this grade: N_{grade-1} plus the
    // grade-level vectors of the longer chains.
    std::vector<RowVec> taken = spaces[grade - 1];
    for (const auto& b : blocks) taken.push_back(b.chain[grade - 1]);
    std::size_t taken_rank = span_rank(taken);

    std::size_t picked = 0;
    for (const auto& candidate : spaces[grade]) {
      if (picked == needed) break;
      taken.push_back(candidate);
      const std::size_t r = span_rank(taken);
      if (r == taken_rank) {
        taken.pop_back();
        continue;
      }
      taken_rank = r;
      ++picked;

      JordanBlockChain block{lambda, std::vector<RowVec>(grade)};
      block.chain[grade - 1] = candidate;
      for (std::size_t k = grade - 1; k >= 1; --k) block.chain[k - 1] = block.chain[k] * m;
      blocks.push_back(std::move(block));
    }
    if (picked != needed) throw Error("internal error: Jordan chain selection fell short at grade " + std::to_string(grade));
  }
  return blocks;
}

Eigenstructure eigenstructure(const Mat& a) {
  const Spectrum spectrum = eigenvalues(a);
  Eigenstructure es;
  es.dimension = a.rows();
  es.complete = spectrum.fully_factored;
  for (const auto& ev : spectrum.eigenvalues) {
    auto chains = left_jordan_chains(a, ev.value);
    for (auto& c : chains) es.blocks.push_back(std::move(c));
  }
  return es;
}

Eigenstructure complete_eigenstructure(const Mat& a) {
  Eigenstructure es = eigenstructure(a);
  if (!es.complete) throw IrrationalSpectrum("spectrum is not fully rational");
  return es;
}

bool is_diagonalizable(const Eigenstructure& es) {
  if (!es.complete) throw IrrationalSpectrum("spectrum is not fully rational");
  for (const auto& b : es.blocks) {
    if (b.size() != 1) return false;
  }
  return true;
}

bool is_diagonalizable(const Mat& a) { return is_diagonalizable(eigenstructure(a)); }

bool verify_eigenstructure(const Mat& a, const Eigenstructure& es) {
  if (!a.is_square() || es.dimension != a.rows()) return false;
  std::size_t total = 0;
  std::vector<RowVec> all;
  for (const auto& block : es.blocks) {
    if (block.chain.empty()) return false;
    const Mat m = shift(a, block.eigenvalue);
    for (std::size_t k = 0; k < block.size(); ++k) {
      const RowVec& v = block.chain[k];
      if (v.size() != a.rows() || v.is_zero()) return false;
      const RowVec image = v * m;
      if (k == 0 ? !image.is_zero() : image != block.chain[k - 1]) return false;
      all.push_back(v);
    }
    if ((block.chain.back() * mat_pow(m, static_cast<unsigned>(block.size() - 1))).is_zero()) return false;
    total += block.size();
  }
  return total == a.rows() && linearly_independent(all);
}

JordanForm jordan_form(const Eigenstructure& es) {
  std::vector<RowVec> rows;
  std::size_t total = 0;
  for (const auto& b : es.blocks) total += b.size();
  Mat j(total, total);
  std::size_t offset = 0;
  for (const auto& b : es.blocks) {
    for (std::size_t k = b.size(); k >= 1; --k) rows.push_back(b.chain[k - 1]);
    for (std::size_t i = 0; i < b.size(); ++i) {
      j(offset + i, offset + i) = b.eigenvalue;
      if (i + 1 < b.size()) j(offset + i, offset + i + 1) = 1;
    }
    offset += b.size();
  }
  return {Mat::from_rows(rows, es.dimension), std::move(j)};
}

}  // namespace kronctrl
