#include "kronctrl/kron_spectral.hpp"

#include <algorithm>
#include <map>

#include "kronctrl/error.hpp"
#include "kronctrl/linalg.hpp"

namespace kronctrl {

namespace {

Rational binomial(unsigned long n, unsigned long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return Rational(mpq_class(c));
}

// Stacks a chain bottom-up: rows v^p, ..., v^1.
Mat stacked_reversed(const JordanBlockChain& block) {
  std::vector<RowVec> rows(block.chain.rbegin(), block.chain.rend());
  return Mat::from_rows(rows);
}

}  // namespace

Mat jordan_block(std::size_t size, const Rational& lambda) {
  Mat j(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    j(i, i) = lambda;
    if (i + 1 < size) j(i, i + 1) = 1;
  }
  return j;
}

std::size_t block_pair_multiplicity(std::size_t p, std::size_t q, const Rational& lambda, const Rational& mu) {
  if (lambda.is_zero() && mu.is_zero()) return p + q - 1;
  if (lambda.is_zero()) return q;
  if (mu.is_zero()) return p;
  return std::min(p, q);
}

BlockPairEigenvectors block_pair_eigenvectors(std::size_t p, std::size_t q, const Rational& lambda, const Rational& mu) {
  if (p == 0 || q == 0) throw DimensionMismatch("Jordan blocks must have size at least 1");
  BlockPairEigenvectors out{lambda, mu, p, q, block_pair_multiplicity(p, q, lambda, mu), {}};
  const auto unit_pair = [&](std::size_t a, std::size_t b) { return kron(RowVec::unit(p, a), RowVec::unit(q, b)); };

  if (lambda.is_zero() && mu.is_zero()) {
    for (std::size_t k = 1; k <= q; ++k) out.vectors.push_back(unit_pair(p, k));
    for (std::size_t a = p - 1; a >= 1; --a) out.vectors.push_back(unit_pair(a, q));
    return out;
  }
  if (lambda.is_zero()) {
    for (std::size_t k = 1; k <= q; ++k) out.vectors.push_back(unit_pair(p, k));
    return out;
  }
  if (mu.is_zero()) {
    for (std::size_t k = 1; k <= p; ++k) out.vectors.push_back(unit_pair(k, q));
    return out;
  }

  // ξ_1 .. ξ_θ in R^q, then η^k = Σ_{l=1..k} e_{p-k+l} ⊗ ξ_l.
  const std::size_t theta = out.theta;
  std::vector<RowVec> xi;
  xi.push_back(RowVec::unit(q, q));
  for (std::size_t k = 2; k <= theta; ++k) {
    const Rational scale = Rational(k % 2 == 1 ? 1 : -1) / pow(lambda, static_cast<unsigned>(k - 1));
    RowVec v(q);
    for (std::size_t l = 0; l <= k - 2; ++l) {
      v[q - k + l] += binomial(k - 2, l) * pow(mu, static_cast<unsigned>(k - l - 1));
    }
    xi.push_back(scale * v);
  }
  for (std::size_t k = 1; k <= theta; ++k) {
    RowVec eta(p * q);
    for (std::size_t l = 1; l <= k; ++l) eta += kron(RowVec::unit(p, p - k + l), xi[l - 1]);
    out.vectors.push_back(std::move(eta));
  }
  return out;
}

std::vector<RowVec> lift_block_pair(const JordanBlockChain& first, const JordanBlockChain& second) {
  const auto coeffs = block_pair_eigenvectors(first.size(), second.size(), first.eigenvalue, second.eigenvalue);
  const Mat lift = kron(stacked_reversed(first), stacked_reversed(second));
  std::vector<RowVec> out;
  out.reserve(coeffs.vectors.size());
  for (const auto& zeta : coeffs.vectors) out.push_back(zeta * lift);
  return out;
}

std::vector<CollisionClass> collision_classes(const Eigenstructure& first, const Eigenstructure& second) {
  if (!first.complete || !second.complete) throw IrrationalSpectrum("collision classes need fully rational spectra");
  std::map<Rational, CollisionClass> by_product;
  for (std::size_t i = 0; i < first.blocks.size(); ++i) {
    for (std::size_t j = 0; j < second.blocks.size(); ++j) {
      const Rational sigma = first.blocks[i].eigenvalue * second.blocks[j].eigenvalue;
      auto& cls = by_product[sigma];
      cls.product = sigma;
      cls.members.emplace_back(i, j);
      auto lifted = lift_block_pair(first.blocks[i], second.blocks[j]);
      cls.basis.insert(cls.basis.end(), std::make_move_iterator(lifted.begin()), std::make_move_iterator(lifted.end()));
    }
  }
  std::vector<CollisionClass> out;
  out.reserve(by_product.size());
  for (auto& [sigma, cls] : by_product) out.push_back(std::move(cls));
  return out;
}

std::vector<RowVec> brute_eigenspace(const Mat& m, const Rational& sigma) { return left_null_space(shift(m, sigma)); }

}  // namespace kronctrl
