#include <gtest/gtest.h>

#include "vrm/errors.hpp"
#include "vrm/measure.hpp"

using namespace vrm;

TEST(MakeMeasure, MergesDuplicates) {
  Measure mu = make_measure({{0.0, 0.5}, {0.0, 0.5}});
  ASSERT_EQ(mu.size(), 1u);
  EXPECT_DOUBLE_EQ(mu[0].mass, 1.0);
}

TEST(MakeMeasure, MergesAcrossZero) {
  Measure mu = make_measure({{1e-12, 0.5}, {kTwoPi - 1e-12, 0.5}});
  ASSERT_EQ(mu.size(), 1u);
  EXPECT_DOUBLE_EQ(mu[0].mass, 1.0);
}

TEST(MakeMeasure, SortsByAngle) {
  Measure mu = make_measure({{kPi, 0.7}, {0.0, 0.3}});
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_EQ(mu[0].position.radians(), 0.0);
  EXPECT_DOUBLE_EQ(mu[0].mass, 0.3);
  EXPECT_DOUBLE_EQ(mu[1].mass, 0.7);
}

TEST(MakeMeasure, Normalizes) {
  Measure mu = make_measure({{0.0, 1.0}, {kPi, 2.0}}, true);
  EXPECT_DOUBLE_EQ(mu[0].mass, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(mu[1].mass, 2.0 / 3.0);
}

TEST(MakeMeasure, DropsZeroMass) {
  Measure mu = make_measure({{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_EQ(mu.size(), 1u);
}

TEST(MakeMeasure, Rejections) {
  EXPECT_THROW(make_measure({}), ValidationError);
  EXPECT_THROW(make_measure({{0.0, 0.0}}), ValidationError);
  EXPECT_THROW(make_measure({{0.0, -0.5}, {1.0, 1.5}}), ValidationError);
  EXPECT_THROW(make_measure({{0.0, 0.5}}), ValidationError);
  EXPECT_THROW(make_measure({{0.0, std::numeric_limits<double>::quiet_NaN()}}), ValidationError);
}

TEST(SupportDiameter, Examples) {
  EXPECT_EQ(support_diameter(delta(Angle(0.0))), 0.0);
  Measure tri = make_measure({{0.0, 1.0}, {kTwoPi / 3, 1.0}, {2 * kTwoPi / 3, 1.0}}, true);
  EXPECT_NEAR(support_diameter(tri), kTwoPi / 3, 1e-15);
  EXPECT_DOUBLE_EQ(support_diameter(make_measure({{0.0, 0.5}, {kPi, 0.5}})), kPi);
}

TEST(SameAtoms, HandlesWrapShift) {
  Measure a = make_measure({{1e-10, 0.5}, {kPi, 0.5}});
  Measure b = make_measure({{kTwoPi - 1e-10, 0.5}, {kPi, 0.5}});
  EXPECT_TRUE(same_atoms(a, b, 1e-9, 0.0));
}
