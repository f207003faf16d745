#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kronctrl/eigenstructure.hpp"
#include "kronctrl/matrix.hpp"
#include "kronctrl/rational.hpp"

namespace kronctrl {

/// λI_size + N with ones on the superdiagonal.
Mat jordan_block(std::size_t size, const Rational& lambda);

/// Geometric multiplicity of λμ in P⊗Q for Jordan blocks P (size p, λ) and
/// Q (size q, μ):
///   min(p,q) if λμ≠0;  q if λ=0,μ≠0;  p if λ≠0,μ=0;  p+q-1 if λ=μ=0.
std::size_t block_pair_multiplicity(std::size_t p, std::size_t q, const Rational& lambda, const Rational& mu);

/// Left eigenvectors of P⊗Q in coefficient space R^{p·q}, where e_a⊗e_b sits
/// at index (a-1)·q + (b-1).
struct BlockPairEigenvectors {
  Rational lambda;
  Rational mu;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t theta = 0;
  std::vector<RowVec> vectors;
};

/// Explicit eigenvectors of the Kronecker product of two Jordan blocks.
///
/// For λμ≠0 the k-th vector is  η^k = Σ_{l=1..k} e_{p-k+l} ⊗ ξ_l  with
///   ξ_1 = e_q,
///   ξ_k = (-1)^{k+1} / λ^{k-1} · Σ_{l=0..k-2} C(k-2,l) μ^{k-l-1} e_{q-k+l+1},
/// for k = 1..min(p,q). The zero cases use plain unit tensors:
///   λ=0,μ≠0:  e_p⊗e_k            (k = 1..q)
///   λ≠0,μ=0:  e_k⊗e_q            (k = 1..p)
///   λ=μ=0:    e_p⊗e_1..e_p⊗e_q, then e_{p-1}⊗e_q..e_1⊗e_q.
/// Requires p, q >= 1 (throws DimensionMismatch otherwise).
BlockPairEigenvectors block_pair_eigenvectors(std::size_t p, std::size_t q, const Rational& lambda, const Rational& mu);

/// Left eigenvectors of A1⊗A2 for λ_i·μ_j, obtained by mapping every
/// block-pair vector ζ through V_i⊗W_j where V_i = [v^p; ...; v^1] and
/// W_j = [w^q; ...; w^1] stack the chains bottom-up. Coefficient index e_p
/// therefore corresponds to the top vector v^1.
std::vector<RowVec> lift_block_pair(const JordanBlockChain& first, const JordanBlockChain& second);

/// Factor block pairs sharing one eigenvalue product σ = λ_i·μ_j, with a
/// basis of the direct sum of their lifted eigenspaces.
struct CollisionClass {
  Rational product;
  std::vector<std::pair<std::size_t, std::size_t>> members;  ///< 0-based block indices (factor 1, factor 2)
  std::vector<RowVec> basis;
};

/// Groups every block pair (i, j) by exact equality of λ_i·μ_j, ascending in
/// the product. Throws IrrationalSpectrum if either input is incomplete.
std::vector<CollisionClass> collision_classes(const Eigenstructure& first, const Eigenstructure& second);

/// Left σ-eigenspace of m computed directly as the left null space of
/// (m - σI). Used as an independent oracle for the constructions above.
std::vector<RowVec> brute_eigenspace(const Mat& m, const Rational& sigma);

}  // namespace kronctrl
