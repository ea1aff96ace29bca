#include <gtest/gtest.h>

#include "vrm/collapse.hpp"
#include "vrm/errors.hpp"
#include "vrm/quotient.hpp"
#include "vrm/transport.hpp"
#include "vrm/verify/random.hpp"

using namespace vrm;

namespace {

Measure triangle(double a, double b, double c) {
  return make_measure({{0.0, a}, {kTwoPi / 3, b}, {2 * kTwoPi / 3, c}}, true);
}

}  // namespace

TEST(AdmissibleCoordinate, Examples) {
  EXPECT_NEAR(admissible_coordinate(delta(Angle(0.0)), 1.0).theta0.radians(), kPi, 1e-15);
  CoordinateSystem cs = admissible_coordinate(triangle(0.5, 0.25, 0.25), kTwoPi / 3);
  EXPECT_NEAR(cs.theta0.radians(), kPi, 1e-15);
  EXPECT_EQ(cs.y0, 0.0);
  // Tie between equal masses goes to the smallest angle.
  EXPECT_NEAR(admissible_coordinate(triangle(1, 1, 1), kTwoPi / 3).theta0.radians(), kPi, 1e-15);
}

TEST(ArcIndex, TriangleCountsFromTheta0) {
  Measure mu = triangle(1, 1, 1);
  ArcDecomposition d = arc_decomposition(mu, kTwoPi / 3);
  CoordinateSystem cs{Angle(kPi), 0.0};
  EXPECT_EQ(arc_index_v(d, cs, Angle(2 * kTwoPi / 3)), 0);
  EXPECT_EQ(arc_index_v(d, cs, Angle(0.0)), 1);
  EXPECT_EQ(arc_index_v(d, cs, Angle(kTwoPi / 3)), 2);
  EXPECT_THROW(arc_index_v(d, cs, Angle(1.0)), MembershipError);
}

TEST(ArcIndex, SingleArcIsZero) {
  Measure mu = make_measure({{0.0, 0.5}, {0.4, 0.5}});
  ArcDecomposition d = arc_decomposition(mu, 1.0);
  CoordinateSystem cs = admissible_coordinate(mu, 1.0);
  EXPECT_EQ(arc_index_v(d, cs, Angle(0.0)), 0);
  EXPECT_EQ(arc_index_v(d, cs, Angle(0.4)), 0);
}

TEST(ArcOffset, Examples) {
  EXPECT_NEAR(arc_offset_m(triangle(1, 1, 1), 1, {Angle(kPi), 0.0}, kTwoPi / 3), kPi / 3, 1e-12);
  EXPECT_NEAR(arc_offset_m(delta(Angle(0.5)), 0, {Angle(0.5 + kPi), 0.0}, 1.0), kPi, 1e-12);
  EXPECT_THROW(arc_offset_m(delta(Angle(0.5)), 1, {Angle(0.5 + kPi), 0.0}, 1.0), MembershipError);
}

TEST(ArcOffset, RotationCovariance) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    verify::Rng rng = verify::trial_rng(8, i);
    double r = verify::random_scale(rng);
    Measure mu = verify::random_thickening_measure(rng, r);
    CoordinateSystem cs = admissible_coordinate(mu, r);
    double alpha = verify::uniform(rng, 0.0, kTwoPi);
    CoordinateSystem rotated{rotate(cs.theta0, alpha), cs.y0};
    int k = classify(mu, r);
    EXPECT_NEAR(arc_offset_m(mu.rotated(alpha), k, rotated, r), arc_offset_m(mu, k, cs, r), 1e-9);
  }
}

TEST(CollapsePoint, Endpoints) {
  Measure mu = make_measure({{0.0, 0.5}, {kPi / 2, 0.5}});
  EXPECT_NEAR(collapse_point(Angle(0.0), mu, 0.0, kPi / 2).radians(), 0.0, 1e-12);
  EXPECT_NEAR(collapse_point(Angle(0.0), mu, 1.0, kPi / 2).radians(), kPi / 4, 1e-12);
  EXPECT_THROW(collapse_point(Angle(1.0), mu, 0.5, kPi / 2), MembershipError);
  EXPECT_THROW(collapse_point(Angle(0.0), mu, 1.5, kPi / 2), DomainError);
  Measure poly = triangle(0.2, 0.3, 0.5).rotated(0.4);
  for (const Atom& a : poly.atoms()) {
    EXPECT_LT(geodesic_distance(collapse_point(a.position, poly, 1.0, kTwoPi / 3), a.position), 1e-12);
  }
}

TEST(CollapsePoint, CoordinateIndependence) {
  for (std::uint64_t i = 0; i < 10000; ++i) {
    verify::Rng rng = verify::trial_rng(31, i);
    double r = verify::random_scale(rng);
    Measure mu = verify::random_thickening_measure(rng, r);
    std::vector<OpenArc> ex = excluded_region(mu, r);
    const OpenArc& e = ex[static_cast<std::size_t>(verify::uniform_int(rng, 0, static_cast<int>(ex.size()) - 1))];
    CoordinateSystem other{rotate(e.start, e.length * verify::uniform(rng, 0.05, 0.95)), verify::uniform(rng, -3, 3)};
    double t = verify::uniform(rng, 0.0, 1.0);
    Angle p = mu[static_cast<std::size_t>(verify::uniform_int(rng, 0, static_cast<int>(mu.size()) - 1))].position;
    ASSERT_LT(geodesic_distance(collapse_point(p, mu, t, r), collapse_point(p, mu, t, r, other)), 1e-9);
  }
}

TEST(CollapsePoint, RejectsCoordinateInsideAnArc) {
  Measure mu = make_measure({{0.0, 0.5}, {0.4, 0.5}});
  EXPECT_THROW(Collapse(mu, 1.0, {Angle(0.2), 0.0}), ExcludedPointError);
}

TEST(CollapseMeasure, Examples) {
  Measure mu = make_measure({{0.0, 0.5}, {kPi / 2, 0.5}});
  Measure end = collapse_measure(mu, 1.0, kPi / 2);
  ASSERT_EQ(end.size(), 1u);
  EXPECT_NEAR(end[0].position.radians(), kPi / 4, 1e-12);

  Measure poly = triangle(0.2, 0.3, 0.5).rotated(1.3);
  for (double t : {0.0, 0.3, 1.0}) EXPECT_TRUE(same_atoms(collapse_measure(poly, t, 2.2), poly, 1e-12, 1e-15));
}

TEST(CollapseMeasure, ExampleSequenceKeepsArcMasses) {
  for (int n : {2, 3, 5, 10}) {
    double rest = (1.0 - 1.0 / n) / 2.0;
    Measure mu = make_measure({{0.0, 1.0 / n}, {kTwoPi / 3, rest}, {2 * kTwoPi / 3, rest}}, true);
    Measure end = canonical_collapse(mu, kTwoPi / 3);
    RegularPolygonalMeasure p = polygonal_form(end, 1);
    std::vector<double> m = p.masses;
    std::sort(m.begin(), m.end());
    EXPECT_NEAR(m[0], std::min(1.0 / n, rest), 1e-15);
    EXPECT_NEAR(m[2], std::max(1.0 / n, rest), 1e-15);
  }
}

TEST(Trajectory, StepsAndEndpoints) {
  Measure mu = make_measure({{0.0, 0.5}, {kPi / 2, 0.5}});
  std::vector<Measure> two = trajectory(mu, kPi / 2, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE(same_atoms(two[0], mu, 0.0, 0.0));
  EXPECT_TRUE(same_atoms(two[1], canonical_collapse(mu, kPi / 2), 0.0, 0.0));
  EXPECT_THROW(trajectory(mu, kPi / 2, 1), DomainError);
}

TEST(Trajectory, FramesMatchDirectEvaluation) {
  verify::Rng rng = verify::trial_rng(2, 0);
  double r = 2.9;
  Measure mu = verify::random_thickening_measure(rng, r);
  std::vector<Measure> frames = trajectory(mu, r, 33);
  for (int i = 0; i < 33; ++i) {
    EXPECT_TRUE(same_atoms(frames[static_cast<std::size_t>(i)], collapse_measure(mu, i / 32.0, r), 0.0, 0.0));
  }
}

TEST(CanonicalCollapse, Examples) {
  EXPECT_NEAR(canonical_collapse(delta(Angle(2.0)), 1.0)[0].position.radians(), 2.0, 1e-12);
  Measure mu = make_measure({{0.0, 0.5}, {kPi / 2, 0.5}});
  EXPECT_NEAR(canonical_collapse(mu, 2.0)[0].position.radians(), kPi / 4, 1e-12);
}

TEST(CanonicalCollapse, IndependentOfValidScale) {
  // Arc grouping does not depend on r, so two valid scales give the same homotopy.
  for (std::uint64_t i = 0; i < 2000; ++i) {
    verify::Rng rng = verify::trial_rng(13, i);
    double r = verify::random_scale(rng);
    Measure mu = verify::random_thickening_measure(rng, r);
    double r2 = verify::uniform(rng, r, kPi);
    double t = verify::uniform(rng, 0.0, 1.0);
    ASSERT_EQ(classify(mu, r), classify(mu, r2));
    ASSERT_LT(wasserstein_circle(collapse_measure(mu, t, r), collapse_measure(mu, t, r2)), 1e-9);
  }
}

TEST(TransportSafeCoordinate, ConservesChartMean) {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    verify::Rng rng = verify::trial_rng(41, i);
    double r = verify::random_scale(rng);
    Measure mu = verify::random_thickening_measure(rng, r);
    CoordinateSystem cs = transport_safe_coordinate(mu, r);
    Collapse c(mu, r, cs);
    double mean0 = 0.0;
    for (std::size_t a = 0; a < mu.size(); ++a) mean0 += mu[a].mass * c.chart_value(a);
    for (double t : {0.25, 0.5, 0.75, 1.0}) {
      double mean = 0.0;
      for (std::size_t a = 0; a < mu.size(); ++a) mean += mu[a].mass * chart_x(cs, c.point(a, t));
      ASSERT_NEAR(mean, mean0, 1e-9) << "trial " << i;
    }
  }
}
