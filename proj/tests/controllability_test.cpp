#include "kronctrl/controllability.hpp"

#include <gtest/gtest.h>

#include <random>

#include "kronctrl/differential.hpp"
#include "kronctrl/eigenstructure.hpp"
#include "kronctrl/error.hpp"
#include "kronctrl/fixtures.hpp"
#include "kronctrl/io.hpp"
#include "kronctrl/kron_spectral.hpp"
#include "kronctrl/linalg.hpp"
#include "support/oracles.hpp"

namespace kronctrl {
namespace {

const KronCase& kron_case(const std::vector<ExampleCase>& cases, const std::string& name) {
  for (const auto& c : cases)
    if (c.name == name) return std::get<KronCase>(c.system);
  throw std::runtime_error("no example " + name);
}

Mat composite(const KronCase& k) { return kron(k.a1, k.a2); }
Mat composite_input(const KronCase& k) { return kron(selection_matrix(k.b1), selection_matrix(k.b2)); }

Mat path_laplacian() { return laplacian(parse_graph("graph 3 undirected\n1 2 1\n2 3 1\n")); }
Mat agent_coupling() { return Mat{{Rational(3, 2), Rational(1, 2)}, {Rational(1, 2), Rational(3, 2)}}; }

class ExamplesTest : public ::testing::Test {
 protected:
  std::vector<ExampleCase> cases = bundled_examples();
};

TEST(OracleTest, ScalarAndDiagonalCases) {
  EXPECT_TRUE(kalman_oracle(Mat{{0}}, Mat{{1}}));
  EXPECT_TRUE(pbh_oracle(Mat{{0}}, Mat{{1}}));
  EXPECT_FALSE(kalman_oracle(Mat{{1, 0}, {0, 1}}, Mat{{1}, {0}}));
  EXPECT_FALSE(pbh_oracle(Mat{{1, 0}, {0, 1}}, Mat{{1}, {0}}));
  EXPECT_TRUE(kalman_oracle(Mat{{1, 0}, {0, 2}}, Mat{{1}, {1}}));
  EXPECT_TRUE(pbh_oracle(Mat{{1, 0}, {0, 2}}, Mat{{1}, {1}}));
  EXPECT_TRUE(kalman_oracle(Mat(0, 0), Mat(0, 0)));
  EXPECT_THROW(kalman_oracle(Mat{{1, 0}, {0, 1}}, Mat{{1}}), DimensionMismatch);
  EXPECT_THROW(pbh_oracle(Mat{{0, 1}, {2, 0}}, Mat{{1}, {0}}), IrrationalSpectrum);
}

TEST(OracleTest, PbhWitnessIsAnUncontrollableMode) {
  const Mat a{{1, 0}, {0, 1}};
  const Mat b{{1}, {0}};
  const auto w = pbh_witness(a, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->eigenvalue, Rational(1));
  EXPECT_TRUE(is_valid_witness(w->vector, w->eigenvalue, a, b));
  EXPECT_FALSE(pbh_witness(Mat{{1, 0}, {0, 2}}, Mat{{1}, {1}}).has_value());
}

TEST_F(ExamplesTest, HiddenCollisionIsUncontrollable) {
  const auto& k = kron_case(cases, "hidden_collision");
  const auto r = check_kron(k.a1, k.b1, k.a2, k.b2);
  EXPECT_EQ(r.verdict, Verdict::uncontrollable);
  EXPECT_EQ(r.method, Method::collision_classes);
  ASSERT_FALSE(r.classes.empty());
  EXPECT_EQ(r.classes[0].sigma, Rational(25));
  EXPECT_EQ(r.classes[0].dimension, 2u);
  EXPECT_EQ(r.classes[0].rank, 1u);
  EXPECT_FALSE(r.classes[0].pass);

  // Published eigenvectors of the σ = 25 class; only the second one is
  // orthogonal to the input.
  const RowVec eta1{0, 0, 0, 0, 1, -1, 0, -1, 1};
  const RowVec eta2{0, -1, 1, 1, 0, -1, -1, 1, 0};
  const Mat a = composite(k), b = composite_input(k);
  EXPECT_EQ(eta1 * a, Rational(25) * eta1);
  EXPECT_EQ(eta2 * a, Rational(25) * eta2);
  EXPECT_TRUE(same_span(brute_eigenspace(a, 25), std::vector<RowVec>{eta1, eta2}));
  EXPECT_EQ((eta1 * b)[0], Rational(1));
  EXPECT_TRUE((eta2 * b).is_zero());

  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness_eigenvalue, Rational(25));
  EXPECT_TRUE(same_span(std::vector<RowVec>{*r.witness}, std::vector<RowVec>{eta2}));
  EXPECT_TRUE(is_valid_witness(*r.witness, 25, a, b));
  EXPECT_FALSE(kalman_oracle(a, b));
  EXPECT_FALSE(pbh_oracle(a, b));
}

TEST_F(ExamplesTest, HiddenCollisionPassesEveryNecessaryScreen) {
  const auto& k = kron_case(cases, "hidden_collision");
  for (const auto& s : necessary_screens(k.a1, k.b1, k.a2, k.b2)) EXPECT_TRUE(s.pass) << s.name;
  // so factor controllability is not sufficient
  EXPECT_TRUE(kalman_oracle(k.a1, selection_matrix(k.b1)));
  EXPECT_FALSE(check_kron(k.a1, k.b1, k.a2, k.b2).controllable());
}

TEST_F(ExamplesTest, DefectivePairIsControllable) {
  const auto& k = kron_case(cases, "defective_pair");
  EXPECT_TRUE(is_diagonalizable(k.a1));
  EXPECT_FALSE(is_diagonalizable(k.a2));
  const auto full = check_kron(k.a1, k.b1, k.a2, k.b2);
  const auto fast = check_with_diagonalizable_factor(k.a1, k.b1, k.a2, k.b2);
  EXPECT_TRUE(full.controllable());
  EXPECT_TRUE(fast.controllable());
  EXPECT_EQ(fast.method, Method::diagonalizable_factor);
  ASSERT_EQ(fast.conditions.size(), 4u);
  for (const auto& c : fast.conditions) EXPECT_TRUE(c.pass) << c.name;
  EXPECT_TRUE(kalman_oracle(composite(k), composite_input(k)));
}

TEST_F(ExamplesTest, DroppingANodeBreaksTheZeroEigenvalueCondition) {
  const auto& k = kron_case(cases, "defective_pair");
  const InputSelection partial(3, {1, 2});
  const auto fast = check_with_diagonalizable_factor(k.a1, k.b1, k.a2, partial);
  EXPECT_EQ(fast.verdict, Verdict::uncontrollable);
  ASSERT_EQ(fast.conditions.size(), 4u);
  EXPECT_TRUE(fast.conditions[0].pass);
  EXPECT_FALSE(fast.conditions[1].pass);
  EXPECT_TRUE(fast.conditions[2].pass);
  EXPECT_TRUE(fast.conditions[3].pass);
  const Mat a = composite(k), b = kron(selection_matrix(k.b1), selection_matrix(partial));
  EXPECT_FALSE(kalman_oracle(a, b));
  ASSERT_TRUE(fast.witness.has_value());
  EXPECT_TRUE(is_valid_witness(*fast.witness, *fast.witness_eigenvalue, a, b));
  EXPECT_FALSE(check_kron(k.a1, k.b1, k.a2, partial).controllable());
}

TEST_F(ExamplesTest, TriangularPairCollisionAtSix) {
  const auto& k = kron_case(cases, "triangular_pair");
  const auto r = check_kron(k.a1, k.b1, k.a2, k.b2);
  EXPECT_TRUE(r.controllable());
  const auto six = std::find_if(r.classes.begin(), r.classes.end(), [](const auto& c) { return c.sigma == 6; });
  ASSERT_NE(six, r.classes.end());
  EXPECT_EQ(six->members.size(), 3u);
  EXPECT_EQ(six->dimension, 3u);
  EXPECT_EQ(six->rank, 3u);
  EXPECT_TRUE(check_with_diagonalizable_factor(k.a1, k.b1, k.a2, k.b2).controllable());
  EXPECT_TRUE(kalman_oracle(composite(k), composite_input(k)));
}

TEST_F(ExamplesTest, TriangularPairPublishedEigenvectors) {
  const auto& k = kron_case(cases, "triangular_pair");
  const RowVec v1{0, 1, 0}, v2{1, 0, -1}, v3{0, 1, 1};
  const RowVec w1{0, 1, 0}, w2{0, 5, 1}, w3{Rational(3, 2), Rational(13, 8), 1};
  EXPECT_TRUE(in_span(brute_eigenspace(k.a1, 2), v1));
  EXPECT_TRUE(in_span(brute_eigenspace(k.a1, 1), v2));
  EXPECT_TRUE(in_span(brute_eigenspace(k.a1, 3), v3));
  EXPECT_TRUE(in_span(brute_eigenspace(k.a2, 2), w1));
  EXPECT_TRUE(in_span(brute_eigenspace(k.a2, 3), w2));
  EXPECT_TRUE(in_span(brute_eigenspace(k.a2, 6), w3));

  const auto classes = collision_classes(complete_eigenstructure(k.a1), complete_eigenstructure(k.a2));
  const auto six = std::find_if(classes.begin(), classes.end(), [](const auto& c) { return c.product == 6; });
  ASSERT_NE(six, classes.end());
  const std::vector<RowVec> products{kron(v1, w2), kron(v2, w3), kron(v3, w1)};
  EXPECT_TRUE(same_span(six->basis, products));

  // Rows of the published evidence [13/8 c2, c2, 5c1 + c3, c1].
  const Mat b = composite_input(k);
  EXPECT_EQ(products[0] * b, (RowVec{0, 0, 5, 1}));
  EXPECT_EQ(products[1] * b, (RowVec{Rational(13, 8), 1, 0, 0}));
  EXPECT_EQ(products[2] * b, (RowVec{0, 0, 1, 0}));
  EXPECT_EQ(testing::naive_rank(Mat::from_rows(products) * b), 3u);
}

TEST(ScreensTest, ZeroEigenvalueNeedsFullSelection) {
  const Mat singular{{0, 1}, {0, 1}};
  const Mat other{{2, 1}, {0, 3}};
  const auto screens = necessary_screens(singular, InputSelection::all(2), other, InputSelection(2, {1}));
  ASSERT_EQ(screens.size(), 4u);
  EXPECT_FALSE(screens[2].pass);
  EXPECT_EQ(screens[2].name, "zero_eigenvalue_first_needs_full_second_selection");
}

TEST(ScreensTest, EmptySelectionFailsFactorScreen) {
  const Mat a = reference_graph_matrix();
  const auto screens = necessary_screens(a, InputSelection(3, {}), a, InputSelection(3, {2}));
  EXPECT_FALSE(screens[0].pass);
  EXPECT_TRUE(screens[1].pass);
}

TEST(KronCheckTest, DimensionMismatch) {
  const Mat a = reference_graph_matrix();
  EXPECT_THROW(check_kron(a, InputSelection(2, {1}), a, InputSelection(3, {1})), DimensionMismatch);
  EXPECT_THROW(check_kron(Mat(2, 3), Mat(2, 1), a, Mat(3, 1)), DimensionMismatch);
}

TEST(KronCheckTest, IrrationalSpectrumFallsBackToOracle) {
  const Mat a{{0, 1}, {2, 0}};
  const auto r = check_kron(a, InputSelection(2, {1}), Mat{{3}}, InputSelection(1, {1}));
  EXPECT_EQ(r.verdict, Verdict::oracle_only);
  EXPECT_EQ(r.method, Method::kalman_oracle);
  EXPECT_TRUE(r.classes.empty());
  EXPECT_FALSE(r.note.empty());
  ASSERT_TRUE(r.oracle_controllable.has_value());
  EXPECT_TRUE(*r.oracle_controllable);
  EXPECT_FALSE(r.oracle_agreement.has_value());
}

TEST(KronCheckTest, NeitherFactorDiagonalizable) {
  const Mat j = jordan_block(2, 1);
  EXPECT_THROW(check_with_diagonalizable_factor(j, InputSelection(2, {2}), j, InputSelection(2, {2})),
               NeitherFactorDiagonalizable);
}

TEST(KronCheckTest, NamesRoundTrip) {
  for (auto v : {Verdict::controllable, Verdict::uncontrollable, Verdict::oracle_only})
    EXPECT_EQ(parse_verdict(to_string(v)), v);
  for (auto m : {Method::collision_classes, Method::diagonalizable_factor, Method::multi_agent, Method::kalman_oracle})
    EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_EQ(to_string(Method::collision_classes), "theorem7");
  EXPECT_THROW(parse_verdict("maybe"), Error);
  EXPECT_THROW(parse_method("guess"), Error);
}

TEST(MultiAgentTest, RankDeficientAgentInput) {
  const MASystem sys(path_laplacian(), agent_coupling(), InputSelection(3, {1}), Mat{{1}, {2}});
  const auto r = check_mas(sys);
  EXPECT_EQ(r.verdict, Verdict::uncontrollable);
  EXPECT_EQ(r.method, Method::multi_agent);
  ASSERT_EQ(r.conditions.size(), 3u);
  EXPECT_TRUE(r.conditions[0].pass);
  EXPECT_FALSE(r.conditions[1].pass);
  EXPECT_TRUE(r.conditions[2].pass);
  EXPECT_EQ(r.oracle_controllable, false);
  EXPECT_EQ(r.oracle_agreement, true);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(is_valid_witness(*r.witness, *r.witness_eigenvalue, sys.state_matrix(), sys.input_matrix()));
  EXPECT_FALSE(kalman_oracle(sys.state_matrix(), sys.input_matrix()));

  const auto legacy = check_legacy_swarm_criterion(sys);
  EXPECT_TRUE(legacy.controllable);
  EXPECT_FALSE(legacy.oracle_controllable);
  EXPECT_FALSE(legacy.agrees_with_oracle);
}

TEST(MultiAgentTest, FullRankAgentInput) {
  const MASystem sys(path_laplacian(), agent_coupling(), InputSelection(3, {1}), Mat::identity(2));
  const auto r = check_mas(sys);
  EXPECT_TRUE(r.controllable());
  EXPECT_EQ(r.oracle_agreement, true);
  EXPECT_TRUE(testing::naive_kalman(sys.state_matrix(), sys.input_matrix()));
  const auto legacy = check_legacy_swarm_criterion(sys);
  EXPECT_TRUE(legacy.controllable);
  EXPECT_TRUE(legacy.agrees_with_oracle);
}

TEST(MultiAgentTest, FullActuation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    WeightedDigraph g(3);
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = 1; j <= 3; ++j)
        if (i != j && rng() % 2) g.add_edge(i, j, 1 + static_cast<long>(rng() % 3));
    const MASystem sys(laplacian(g), agent_coupling(), InputSelection::all(3), Mat::identity(2));
    EXPECT_TRUE(check_mas(sys).controllable());
  }
}

TEST(MultiAgentTest, SingularCouplingNeedsEveryAgentToLead) {
  const Mat h{{1, 1}, {1, 1}};
  const MASystem some(path_laplacian(), h, InputSelection(3, {1}), Mat::identity(2));
  const auto r = check_mas(some);
  EXPECT_FALSE(r.conditions[2].pass);
  EXPECT_FALSE(r.controllable());
  EXPECT_EQ(r.oracle_agreement, true);
}

TEST(MultiAgentTest, LegacyCriterionOnUnreachableFollower) {
  // Node 3 is isolated, so no leader influence reaches it.
  const Mat l = laplacian(parse_graph("graph 3 undirected\n1 2 1\n"));
  const MASystem sys(l, agent_coupling(), InputSelection(3, {1}), Mat::identity(2));
  const auto legacy = check_legacy_swarm_criterion(sys);
  EXPECT_FALSE(legacy.follower_pair_controllable);
  EXPECT_FALSE(legacy.controllable);
  EXPECT_TRUE(legacy.agrees_with_oracle);
  EXPECT_FALSE(check_mas(sys).controllable());
}

TEST(MultiAgentTest, LegacyCriterionPermutesLeadersToTheFront) {
  // Leader 3 on the path is the mirror image of leader 1.
  const MASystem end_leader(path_laplacian(), agent_coupling(), InputSelection(3, {3}), Mat::identity(2));
  const MASystem first_leader(path_laplacian(), agent_coupling(), InputSelection(3, {1}), Mat::identity(2));
  const auto a = check_legacy_swarm_criterion(end_leader);
  const auto b = check_legacy_swarm_criterion(first_leader);
  EXPECT_EQ(a.follower_pair_controllable, b.follower_pair_controllable);
  EXPECT_EQ(a.controllable, b.controllable);
  // Middle leader: the two followers are symmetric, so uncontrollable.
  const MASystem middle(path_laplacian(), agent_coupling(), InputSelection(3, {2}), Mat::identity(2));
  EXPECT_FALSE(check_legacy_swarm_criterion(middle).follower_pair_controllable);
  EXPECT_FALSE(check_mas(middle).controllable());
}

// The three conditions against the Kalman rank test over random directed
// and undirected interaction graphs.
TEST(MultiAgentTest, AgreesWithKalmanOnRandomSystems) {
  std::mt19937_64 rng(808);
  std::size_t uncontrollable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n_agents = 1 + rng() % 4, n = 1 + rng() % 2, m = 1 + rng() % 2;
    const bool undirected = trial % 2 == 0;
    WeightedDigraph g(n_agents);
    for (std::size_t i = 1; i <= n_agents; ++i)
      for (std::size_t j = undirected ? i + 1 : 1; j <= n_agents; ++j) {
        if (i == j || rng() % 3 == 0) continue;
        const Rational w = 1 + static_cast<long>(rng() % 2);
        g.add_edge(i, j, w);
        if (undirected) g.add_edge(j, i, w);
      }
    std::vector<std::size_t> leaders;
    for (std::size_t k = 1; k <= n_agents; ++k)
      if (rng() % 2) leaders.push_back(k);
    if (leaders.empty()) leaders.push_back(1 + rng() % n_agents);
    const MASystem sys(laplacian(g), testing::random_int_matrix(rng, n, n, 2),
                       InputSelection(n_agents, leaders), testing::random_int_matrix(rng, n, m, 1));
    const auto r = check_mas(sys);
    const bool oracle = testing::naive_kalman(sys.state_matrix(), sys.input_matrix());
    EXPECT_EQ(r.controllable(), oracle) << "trial " << trial;
    if (!oracle) ++uncontrollable;
    const auto legacy = check_legacy_swarm_criterion(sys);
    if (oracle) EXPECT_TRUE(legacy.controllable) << "the two conditions are necessary; trial " << trial;
  }
  EXPECT_GT(uncontrollable, 20u);
}

TEST(ObservabilityTest, DualsOfReferenceExamples) {
  const auto cases = bundled_examples();
  const auto& collision = kron_case(cases, "hidden_collision");
  const auto& defective = kron_case(cases, "defective_pair");
  EXPECT_FALSE(check_observability_dual(collision.a1, collision.b1, collision.a2, collision.b2).controllable());
  const auto obs = check_observability_dual(defective.a1, defective.b1, defective.a2, defective.b2);
  EXPECT_TRUE(obs.controllable());
  EXPECT_NE(obs.note.find("observability"), std::string::npos);
  // Kalman on the observability matrix of (A, C) via the transposed pair.
  const Mat at = composite(defective).transpose();
  EXPECT_TRUE(kalman_oracle(at, composite_input(defective)));
}

TEST(ObservabilityTest, FullMeasurementIsObservable) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const Mat a = testing::random_int_matrix(rng, n, n);
    const auto r = check_observability_dual(a, InputSelection::all(n));
    EXPECT_NE(r.verdict, Verdict::uncontrollable);
    if (r.verdict == Verdict::oracle_only) EXPECT_EQ(r.oracle_controllable, true);
  }
}

// Properties over the random population.
class RandomPopulationTest : public ::testing::Test {
 protected:
  static constexpr std::size_t kTrials = 600;
  const InstanceGenerator gen{4242, 3};
};

TEST_F(RandomPopulationTest, FourConditionTestMatchesCollisionClasses) {
  std::size_t compared = 0;
  for (std::size_t k = 0; k < kTrials; ++k) {
    const auto inst = gen.instance(k);
    const auto e1 = eigenstructure(inst.a1), e2 = eigenstructure(inst.a2);
    if (!e1.complete || !e2.complete) continue;
    if (!is_diagonalizable(e1) && !is_diagonalizable(e2)) continue;
    ++compared;
    const auto full = check_kron(inst.a1, inst.b1, inst.a2, inst.b2);
    const auto fast = check_with_diagonalizable_factor(inst.a1, inst.b1, inst.a2, inst.b2);
    EXPECT_EQ(full.verdict, fast.verdict) << "instance " << k;
  }
  EXPECT_GT(compared, 150u);
}

TEST_F(RandomPopulationTest, EnlargingTheInputSetKeepsControllability) {
  std::size_t checked = 0;
  for (std::size_t k = 0; k < kTrials; ++k) {
    const auto inst = gen.instance(k);
    const Mat a = kron(inst.a1, inst.a2);
    if (!kalman_oracle(a, kron(selection_matrix(inst.b1), selection_matrix(inst.b2)))) continue;
    for (std::size_t node = 1; node <= inst.a1.rows(); ++node) {
      auto nodes = inst.b1.actuated();
      if (std::find(nodes.begin(), nodes.end(), node) != nodes.end()) continue;
      nodes.push_back(node);
      const InputSelection bigger(inst.a1.rows(), nodes);
      const auto r = check_kron(inst.a1, bigger, inst.a2, inst.b2);
      const bool verdict = r.verdict == Verdict::oracle_only ? *r.oracle_controllable : r.controllable();
      EXPECT_TRUE(verdict) << "instance " << k << " node " << node;
      ++checked;
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST_F(RandomPopulationTest, CompositeControllabilityNeedsControllableFactors) {
  std::size_t controllable = 0;
  for (std::size_t k = 0; k < kTrials; ++k) {
    const auto inst = gen.instance(k);
    if (!kalman_oracle(kron(inst.a1, inst.a2), kron(selection_matrix(inst.b1), selection_matrix(inst.b2)))) continue;
    ++controllable;
    EXPECT_TRUE(kalman_oracle(inst.a1, selection_matrix(inst.b1))) << k;
    EXPECT_TRUE(kalman_oracle(inst.a2, selection_matrix(inst.b2))) << k;
    for (const auto& s : necessary_screens(inst.a1, inst.b1, inst.a2, inst.b2)) EXPECT_TRUE(s.pass) << k << s.name;
  }
  EXPECT_GT(controllable, 20u);
}

TEST_F(RandomPopulationTest, VerdictsAndWitnessesAgreeWithOracles) {
  std::size_t decided = 0;
  for (std::size_t k = 0; k < kTrials; ++k) {
    const auto inst = gen.instance(k);
    const auto r = check_kron(inst.a1, inst.b1, inst.a2, inst.b2);
    const Mat a = kron(inst.a1, inst.a2), b = kron(selection_matrix(inst.b1), selection_matrix(inst.b2));
    const bool oracle = testing::naive_kalman(a, b);
    if (r.verdict == Verdict::oracle_only) {
      EXPECT_EQ(r.oracle_controllable, oracle);
      continue;
    }
    ++decided;
    EXPECT_EQ(r.controllable(), oracle) << k;
    EXPECT_EQ(kalman_oracle(a, b), oracle) << k;
    EXPECT_EQ(pbh_oracle(a, b), oracle) << k;
    for (const auto& c : r.classes) EXPECT_EQ(c.pass, c.rank == c.dimension);
    if (!r.controllable()) {
      ASSERT_TRUE(r.witness.has_value()) << k;
      EXPECT_TRUE(is_valid_witness(*r.witness, *r.witness_eigenvalue, a, b)) << k;
    } else {
      EXPECT_FALSE(r.witness.has_value());
    }
  }
  EXPECT_GE(decided, 200u);
}

}  // namespace
}  // namespace kronctrl
