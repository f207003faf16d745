#include "kronctrl/poly.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "support/oracles.hpp"

namespace kronctrl {
namespace {

Poly from_roots(const std::vector<Rational>& roots) {
  Poly p{1};
  for (const auto& r : roots) p = p * Poly::linear(r);
  return p;
}

TEST(PolyTest, BasicAlgebra) {
  const Poly p{-1, 0, 1};  // s^2 - 1
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Rational(3)), Rational(8));
  EXPECT_EQ(p.derivative(), (Poly{0, 2}));
  EXPECT_EQ(Poly::linear(1) * Poly::linear(-1), p);
  EXPECT_EQ(Poly{}.degree(), -1);
  EXPECT_EQ(p - p, Poly{});

  const auto [q, r] = divmod(Poly{1, 0, 0, 1}, Poly{1, 1});  // (s^3+1)/(s+1)
  EXPECT_EQ(q, (Poly{1, -1, 1}));
  EXPECT_EQ(r, Poly{});
  EXPECT_THROW(divmod(p, Poly{}), std::domain_error);

  EXPECT_EQ(gcd(Poly{-2, 1} * Poly{1, 1}, Poly{1, 1} * Poly{5, 1}), (Poly{1, 1}));
  EXPECT_EQ(gcd(Poly{0, 3}, Poly{1}), Poly{1});
}

TEST(PolyTest, RootsWithMultiplicity) {
  const auto r = rational_roots(from_roots({Rational(1, 2), Rational(1, 2), -3}));
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(r.roots[0], (RationalRoot{-3, 1}));
  EXPECT_EQ(r.roots[1], (RationalRoot{Rational(1, 2), 2}));
  EXPECT_TRUE(r.fully_factored);
}

TEST(PolyTest, ZeroRootsAndConstants) {
  const auto r = rational_roots(Poly{0, 0, 0, 1});
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_EQ(r.roots[0], (RationalRoot{0, 3}));
  EXPECT_TRUE(r.fully_factored);
  EXPECT_TRUE(rational_roots(Poly{5}).fully_factored);
  EXPECT_TRUE(rational_roots(Poly{5}).roots.empty());
  EXPECT_THROW(rational_roots(Poly{}), std::invalid_argument);
}

TEST(PolyTest, IrreducibleFactorsLeaveSpectrumIncomplete) {
  const auto two = rational_roots(Poly{-2, 0, 1});
  EXPECT_TRUE(two.roots.empty());
  EXPECT_FALSE(two.fully_factored);
  const auto mixed = rational_roots(Poly{1, 0, 1} * Poly::linear(4));
  ASSERT_EQ(mixed.roots.size(), 1u);
  EXPECT_EQ(mixed.roots[0].value, Rational(4));
  EXPECT_FALSE(mixed.fully_factored);
}

TEST(PolyTest, LargeConstantTermsStayFast) {
  const auto r = rational_roots(from_roots({Rational(1000003), Rational(-999983), Rational(7, 1000)}));
  ASSERT_EQ(r.roots.size(), 3u);
  EXPECT_EQ(r.roots[0].value, Rational(-999983));
  EXPECT_EQ(r.roots[1].value, Rational(7, 1000));
  EXPECT_EQ(r.roots[2].value, Rational(1000003));
}

TEST(PolyTest, AgreesWithDivisorTrialOnRandomPolynomials) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> small(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    // Product of a few (q s - p) factors, sometimes times s^2 + c.
    std::vector<long> coeffs{small(rng) == 0 ? 2 : 1};
    const int factors = 1 + static_cast<int>(rng() % 4);
    for (int f = 0; f < factors; ++f) {
      const long p = small(rng);
      const long q = 1 + static_cast<long>(rng() % 3);
      std::vector<long> next(coeffs.size() + 1, 0);
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        next[k] += -p * coeffs[k];
        next[k + 1] += q * coeffs[k];
      }
      coeffs = next;
    }
    if (trial % 4 == 0) {
      const long c = 1 + static_cast<long>(rng() % 3);
      std::vector<long> next(coeffs.size() + 2, 0);
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        next[k] += c * coeffs[k];
        next[k + 2] += coeffs[k];
      }
      coeffs = next;
    }
    std::vector<Rational> rc(coeffs.begin(), coeffs.end());
    const auto got = rational_roots(Poly(rc));
    const auto want = testing::divisor_trial_roots(coeffs);
    ASSERT_EQ(got.roots.size(), want.size()) << "trial " << trial;
    std::size_t total = 0;
    for (std::size_t k = 0; k < want.size(); ++k) {
      EXPECT_EQ(got.roots[k].value, want[k].first);
      EXPECT_EQ(got.roots[k].multiplicity, want[k].second);
      total += want[k].second;
    }
    EXPECT_EQ(got.fully_factored, static_cast<int>(total) == Poly(rc).degree());
  }
}

}  // namespace
}  // namespace kronctrl
