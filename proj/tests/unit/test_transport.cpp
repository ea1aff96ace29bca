#include <gtest/gtest.h>

#include "vrm/errors.hpp"
#include "vrm/transport.hpp"
#include "vrm/verify/random.hpp"

using namespace vrm;

namespace {

// Brute-force W1 for a single-atom target: the only feasible matching sends everything to it.
double to_delta(const Measure& mu, Angle p) {
  double s = 0.0;
  for (const Atom& a : mu.atoms()) s += a.mass * geodesic_distance(a.position, p);
  return s;
}

}  // namespace

TEST(MatchingCost, Examples) {
  Measure mu = make_measure({{0.0, 1.0}});
  Measure pi = make_measure({{kPi, 1.0}});
  EXPECT_DOUBLE_EQ(matching_cost({{{0, 0, 1.0}}}, mu, pi), kPi);
  EXPECT_EQ(matching_cost({{{0, 0, 1.0}}}, mu, mu), 0.0);
  Measure split = make_measure({{kPi / 2, 0.5}, {3 * kPi / 2, 0.5}});
  EXPECT_DOUBLE_EQ(matching_cost({{{0, 0, 0.5}, {0, 1, 0.5}}}, mu, split), kPi / 2);
  EXPECT_THROW(matching_cost({{{0, 0, 0.4}, {0, 1, 0.5}}}, mu, split), ValidationError);
}

TEST(WassersteinLp, Examples) {
  EXPECT_NEAR(wasserstein_lp(delta(Angle(0.0)), delta(Angle(kPi / 2))).distance, kPi / 2, 1e-12);
  Measure mu = make_measure({{0.0, 0.3}, {2.0, 0.7}});
  EXPECT_EQ(wasserstein_lp(mu, mu).distance, 0.0);
  Measure two = make_measure({{0.0, 0.5}, {kPi / 2, 0.5}});
  TransportPlan plan = wasserstein_lp(two, delta(Angle(kPi / 4)));
  EXPECT_NEAR(plan.distance, kPi / 4, 1e-12);
  EXPECT_NEAR(matching_cost(plan.matching, two, delta(Angle(kPi / 4))), plan.distance, 1e-12);
}

TEST(WassersteinLp, AtomCap) {
  std::vector<std::pair<double, double>> pairs;
  for (int i = 0; i < 40; ++i) pairs.emplace_back(0.1 * i, 1.0);
  Measure big = make_measure(pairs, true);
  EXPECT_THROW(wasserstein_lp(big, big), SizeError);
  EXPECT_NO_THROW(wasserstein_lp(big, big, 80));
}

TEST(WassersteinLp, MatchesSingleTargetOracle) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    verify::Rng rng = verify::trial_rng(21, i);
    Measure mu = verify::random_measure(rng, 8);
    Angle p(verify::uniform(rng, 0.0, kTwoPi));
    EXPECT_NEAR(wasserstein_lp(mu, delta(p)).distance, to_delta(mu, p), 1e-12);
    EXPECT_NEAR(wasserstein_circle(mu, delta(p)), to_delta(mu, p), 1e-12);
  }
}

TEST(WassersteinCircle, Examples) {
  EXPECT_NEAR(wasserstein_circle(delta(Angle(0.0)), delta(Angle(kPi))), kPi, 1e-15);
  EXPECT_NEAR(wasserstein_circle(delta(Angle(0.0)), delta(Angle(kPi / 2))), kPi / 2, 1e-15);
  Measure two = make_measure({{0.0, 0.5}, {kPi / 2, 0.5}});
  EXPECT_NEAR(wasserstein_circle(two, delta(Angle(kPi / 4))), kPi / 4, 1e-15);
  // Wrap-around transport: mass near 0 moves backwards past zero.
  EXPECT_NEAR(wasserstein_circle(delta(Angle(0.1)), delta(Angle(kTwoPi - 0.1))), 0.2, 1e-12);
}

TEST(Wasserstein, RandomAgreementAndAxioms) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    verify::Rng rng = verify::trial_rng(99, i);
    Measure a = verify::random_measure(rng, 6), b = verify::random_measure(rng, 6), c = verify::random_measure(rng, 6);
    double ab = wasserstein_circle(a, b);
    EXPECT_NEAR(ab, wasserstein_lp(a, b).distance, 1e-9);
    EXPECT_EQ(ab, wasserstein_circle(b, a));
    EXPECT_LE(ab, wasserstein_circle(a, c) + wasserstein_circle(c, b) + 1e-9);
    double alpha = verify::uniform(rng, 0.0, kTwoPi);
    EXPECT_NEAR(wasserstein_circle(a.rotated(alpha), b.rotated(alpha)), ab, 1e-9);
  }
}

TEST(Wasserstein, DeltaPairsEqualGeodesic) {
  for (std::uint64_t i = 0; i < 10000; ++i) {
    verify::Rng rng = verify::trial_rng(4, i);
    Angle p(verify::uniform(rng, 0.0, kTwoPi)), q(verify::uniform(rng, 0.0, kTwoPi));
    ASSERT_NEAR(wasserstein_circle(delta(p), delta(q)), geodesic_distance(p, q), 1e-12);
  }
}
