#include "kronctrl/kron_spectral.hpp"

#include <gtest/gtest.h>

#include "kronctrl/differential.hpp"
#include "kronctrl/error.hpp"
#include "kronctrl/linalg.hpp"
#include "support/oracles.hpp"

namespace kronctrl {
namespace {

TEST(BlockPairTest, MultiplicityCases) {
  EXPECT_EQ(block_pair_multiplicity(3, 5, 2, 3), 3u);
  EXPECT_EQ(block_pair_multiplicity(3, 5, 0, 3), 5u);
  EXPECT_EQ(block_pair_multiplicity(3, 5, 2, 0), 3u);
  EXPECT_EQ(block_pair_multiplicity(3, 5, 0, 0), 7u);
}

// Coefficient space index of e_a⊗e_b is (a-1)q + (b-1). For two 2x2 blocks
// at eigenvalue 1 the vectors are e2⊗e2 and e1⊗e2 - e2⊗e1.
TEST(BlockPairTest, TwoByTwoIndexConvention) {
  const auto bp = block_pair_eigenvectors(2, 2, 1, 1);
  ASSERT_EQ(bp.vectors.size(), 2u);
  EXPECT_EQ(bp.vectors[0], (RowVec{0, 0, 0, 1}));
  EXPECT_EQ(bp.vectors[1], (RowVec{0, 1, -1, 0}));
  const Mat pq = kron(jordan_block(2, 1), jordan_block(2, 1));
  EXPECT_EQ(bp.vectors[1] * pq, bp.vectors[1]);
}

TEST(BlockPairTest, ExplicitVectorsForThreeByThree) {
  // ξ_1 = e3, ξ_2 = -(μ/λ) e2, ξ_3 = (μ² e1 + μ e2)/λ²
  const auto bp = block_pair_eigenvectors(3, 3, 2, 3);
  ASSERT_EQ(bp.vectors.size(), 3u);
  EXPECT_EQ(bp.vectors[0], (RowVec{0, 0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(bp.vectors[1], (RowVec{0, 0, 0, 0, 0, 1, 0, Rational(-3, 2), 0}));
  EXPECT_EQ(bp.vectors[2], (RowVec{0, 0, 1, 0, Rational(-3, 2), 0, Rational(9, 4), Rational(3, 4), 0}));
}

class BlockPairSweep : public ::testing::TestWithParam<std::pair<Rational, Rational>> {};

TEST_P(BlockPairSweep, VectorsSpanTheEigenspace) {
  const auto [lambda, mu] = GetParam();
  for (std::size_t p = 1; p <= 5; ++p) {
    for (std::size_t q = 1; q <= 5; ++q) {
      const auto bp = block_pair_eigenvectors(p, q, lambda, mu);
      const Mat pq = kron(jordan_block(p, lambda), jordan_block(q, mu));
      const Rational sigma = lambda * mu;
      EXPECT_EQ(bp.vectors.size(), bp.theta);
      EXPECT_EQ(bp.theta, block_pair_multiplicity(p, q, lambda, mu));
      for (const auto& eta : bp.vectors) EXPECT_EQ(eta * pq, sigma * eta) << p << "x" << q;
      EXPECT_EQ(testing::naive_rank(bp.vectors, p * q), bp.theta) << p << "x" << q;
      EXPECT_TRUE(same_span(bp.vectors, brute_eigenspace(pq, sigma))) << p << "x" << q;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SignCases, BlockPairSweep,
                         ::testing::Values(std::pair<Rational, Rational>{2, 3}, std::pair<Rational, Rational>{0, 3},
                                           std::pair<Rational, Rational>{2, 0}, std::pair<Rational, Rational>{0, 0},
                                           std::pair<Rational, Rational>{-2, 3},
                                           std::pair<Rational, Rational>{Rational(1, 2), Rational(-5, 3)},
                                           std::pair<Rational, Rational>{-1, -1}));

TEST(BlockPairTest, RejectsEmptyBlocks) {
  EXPECT_THROW(block_pair_eigenvectors(0, 2, 1, 1), DimensionMismatch);
}

// Term-by-term transcription of the published lift for k <= 3:
//   η^1 = v^1⊗w^1
//   η^2 = v^2⊗w^1 - (μ/λ) v^1⊗w^2
//   η^3 = v^3⊗w^1 - (μ/λ) v^2⊗w^2 + v^1⊗[(μ²/λ²) w^3 + (μ/λ²) w^2]
std::vector<RowVec> transcribed_lift(const JordanBlockChain& v, const JordanBlockChain& w, std::size_t count) {
  const Rational l = v.eigenvalue, m = w.eigenvalue;
  std::vector<RowVec> out;
  if (count >= 1) out.push_back(kron(v.v(1), w.v(1)));
  if (count >= 2) out.push_back(kron(v.v(2), w.v(1)) - (m / l) * kron(v.v(1), w.v(2)));
  if (count >= 3)
    out.push_back(kron(v.v(3), w.v(1)) - (m / l) * kron(v.v(2), w.v(2)) +
                  kron(v.v(1), (m * m / (l * l)) * w.v(3) + (m / (l * l)) * w.v(2)));
  return out;
}

TEST(LiftTest, AgreesWithTranscribedExpansion) {
  // Block pairs from defective factors with nonzero eigenvalues.
  const std::vector<Mat> factors{jordan_block(3, 2), jordan_block(3, -1),
                                 Mat{{2, 1, 0}, {0, 2, 0}, {1, 0, 2}}, Mat{{3, 1, 1}, {0, 3, 1}, {0, 0, 3}},
                                 Mat{{Rational(17, 2), 4, Rational(-1, 2)}, {Rational(7, 2), 8, Rational(1, 2)},
                                     {Rational(7, 2), 3, Rational(11, 2)}}};
  std::size_t compared = 0;
  for (const auto& f1 : factors) {
    for (const auto& f2 : factors) {
      const auto e1 = complete_eigenstructure(f1), e2 = complete_eigenstructure(f2);
      for (const auto& v : e1.blocks)
        for (const auto& w : e2.blocks) {
          if (v.eigenvalue.is_zero() || w.eigenvalue.is_zero()) continue;
          const auto lifted = lift_block_pair(v, w);
          const std::size_t k = std::min<std::size_t>(lifted.size(), 3);
          const auto expected = transcribed_lift(v, w, k);
          for (std::size_t i = 0; i < k; ++i, ++compared) EXPECT_EQ(lifted[i], expected[i]);
        }
    }
  }
  EXPECT_GT(compared, 40u);
}

TEST(LiftTest, ClassesSpanBruteEigenspacesOnRandomPopulation) {
  const InstanceGenerator gen(99, 3);
  std::size_t pairs = 0;
  for (std::size_t k = 0; k < 400 && pairs < 80; ++k) {
    const auto inst = gen.instance(k);
    const auto e1 = eigenstructure(inst.a1), e2 = eigenstructure(inst.a2);
    if (!e1.complete || !e2.complete) continue;
    ++pairs;
    const Mat a = kron(inst.a1, inst.a2);
    std::size_t total = 0;
    for (const auto& cls : collision_classes(e1, e2)) {
      const auto brute = brute_eigenspace(a, cls.product);
      EXPECT_EQ(cls.basis.size(), brute.size());
      EXPECT_TRUE(same_span(cls.basis, brute)) << "instance " << k << " sigma " << cls.product;
      total += cls.members.size();
    }
    EXPECT_EQ(total, e1.blocks.size() * e2.blocks.size());
  }
  EXPECT_GE(pairs, 50u);
}

TEST(LiftTest, CollisionClassesRequireRationalSpectra) {
  const auto irrational = eigenstructure(Mat{{0, 1}, {2, 0}});
  const auto fine = complete_eigenstructure(Mat{{1}});
  EXPECT_THROW(collision_classes(irrational, fine), IrrationalSpectrum);
}

}  // namespace
}  // namespace kronctrl
