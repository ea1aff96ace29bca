#include <gtest/gtest.h>

#include "vrm/arcs.hpp"
#include "vrm/errors.hpp"
#include "vrm/verify/random.hpp"

using namespace vrm;

namespace {

Measure polygon(int vertices) {
  std::vector<std::pair<double, double>> pairs;
  for (int i = 0; i < vertices; ++i) pairs.emplace_back(kTwoPi * i / vertices, 1.0);
  return make_measure(pairs, true);
}

Measure example_sequence(int n) {
  // Mass 1/n at 0, the rest split between the other two vertices of the 3-gon.
  double rest = (1.0 - 1.0 / n) / 2.0;
  return make_measure({{0.0, 1.0 / n}, {kTwoPi / 3, rest}, {2 * kTwoPi / 3, rest}}, true);
}

}  // namespace

TEST(ExcludedRegion, DeltaAtQuarterTurn) {
  std::vector<OpenArc> ex = excluded_region(delta(Angle(0.0)), kPi / 2);
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_NEAR(ex[0].start.radians(), kPi / 2, 1e-9);
  EXPECT_NEAR(ex[0].length, kPi, 1e-9);
}

TEST(ExcludedRegion, TriangleLeavesOnlyVertices) {
  std::vector<OpenArc> ex = excluded_region(polygon(3), kTwoPi / 3);
  ASSERT_EQ(ex.size(), 3u);
  for (const OpenArc& e : ex) EXPECT_NEAR(e.length, kTwoPi / 3, 1e-9);
  for (int i = 0; i < 3; ++i) {
    Angle v(kTwoPi * i / 3);
    for (const OpenArc& e : ex) EXPECT_FALSE(e.contains(v));
  }
}

TEST(ExcludedRegion, ShrinksNearPi) {
  std::vector<OpenArc> ex = excluded_region(delta(Angle(0.0)), kPi - 1e-3);
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_NEAR(ex[0].length, 2e-3, 1e-9);
}

TEST(ExcludedRegion, Errors) {
  EXPECT_THROW(excluded_region(delta(Angle(0.0)), -0.1), ScaleError);
  EXPECT_THROW(excluded_region(delta(Angle(0.0)), kPi), ContractibleRegimeError);
  EXPECT_THROW(excluded_region(make_measure({{0.0, 0.5}, {2.0, 0.5}}), 1.0), NotInThickeningError);
}

TEST(ArcDecomposition, DeltaGivesOneArcOfLength2r) {
  ArcDecomposition d = arc_decomposition(delta(Angle(0.0)), 1.0);
  ASSERT_EQ(d.count(), 1u);
  EXPECT_NEAR(d.arcs[0].start.radians(), kTwoPi - 1.0, 1e-9);
  EXPECT_NEAR(d.arcs[0].length, 2.0, 1e-9);
  EXPECT_DOUBLE_EQ(d.arcs[0].mass, 1.0);
}

TEST(ArcDecomposition, TriangleSingletons) {
  ArcDecomposition d = arc_decomposition(polygon(3), kTwoPi / 3);
  ASSERT_EQ(d.count(), 3u);
  for (const Arc& a : d.arcs) {
    EXPECT_NEAR(a.length, 0.0, 1e-9);
    EXPECT_NEAR(a.mass, 1.0 / 3, 1e-15);
  }
}

TEST(ArcDecomposition, ExampleLimitMeasureHasOneArc) {
  Measure limit = make_measure({{kTwoPi / 3, 0.5}, {2 * kTwoPi / 3, 0.5}});
  EXPECT_EQ(arcs_count(limit, kTwoPi / 3), 1);
  EXPECT_EQ(classify(limit, kTwoPi / 3), 0);
}

TEST(ArcDecomposition, SupportlessComponentIsNotAnArc) {
  // Two atoms one radian apart at r = 3: a tiny complement piece opposite the pair has no support.
  Measure mu = make_measure({{0.0, 0.5}, {1.0, 0.5}});
  ArcDecomposition d = arc_decomposition(mu, 3.0);
  EXPECT_EQ(d.count(), 1u);
}

TEST(Classify, Examples) {
  for (double r : {0.0, 1.0, 2.5, 3.1}) EXPECT_EQ(classify(delta(Angle(0.7)), r), 0);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(classify(polygon(2 * k + 1), 2.0 * k * kPi / (2 * k + 1)), k) << k;
  }
  for (int n = 2; n <= 50; ++n) EXPECT_EQ(classify(example_sequence(n), kTwoPi / 3), 1) << n;
}

TEST(MaxK, Examples) {
  EXPECT_EQ(max_k(2.0), 0);
  EXPECT_EQ(max_k(kTwoPi / 3), 1);
  EXPECT_EQ(max_k(6 * kPi / 7), 3);
  EXPECT_EQ(max_k(0.0), 0);
  EXPECT_THROW(max_k(kPi), ContractibleRegimeError);
  EXPECT_THROW(max_k(-1e-9), ScaleError);
}

TEST(MaxK, Boundaries) {
  for (int k = 1; k <= 5; ++k) {
    double t = 2.0 * k * kPi / (2 * k + 1);
    EXPECT_EQ(max_k(t + 1e-9), k);
    EXPECT_EQ(max_k(t - 1e-9), k - 1);
  }
}

TEST(Alternation, Examples) {
  std::vector<Angle> one{Angle(0.3)};
  EXPECT_TRUE(alternation_check(one, 0.5));
  std::vector<Angle> tri{Angle(0.0), Angle(kTwoPi / 3), Angle(2 * kTwoPi / 3)};
  EXPECT_TRUE(alternation_check(tri, kTwoPi / 3));
  std::vector<Angle> pair{Angle(0.0), Angle(1.0)};
  EXPECT_FALSE(alternation_check(pair, 1.0));
}

TEST(DegreeArcCount, Examples) {
  std::vector<Angle> one{Angle(2.0)};
  EXPECT_EQ(degree_arc_count(one, 1.0), 1);
  std::vector<Angle> tri{Angle(0.0), Angle(kTwoPi / 3), Angle(2 * kTwoPi / 3)};
  EXPECT_EQ(degree_arc_count(tri, kTwoPi / 3), 3);
}

TEST(DegreeArcCount, AgreesWithDecomposition) {
  for (std::uint64_t i = 0; i < 10000; ++i) {
    verify::Rng rng = verify::trial_rng(17, i);
    double r = verify::random_scale(rng);
    Measure mu = verify::random_thickening_measure(rng, r);
    std::vector<Angle> s = mu.support();
    ASSERT_EQ(degree_arc_count(s, r), arcs_count(mu, r)) << "trial " << i;
  }
}

TEST(MaxArcsExtension, Examples) {
  EXPECT_EQ(max_arcs_extension(delta(Angle(0.0)), kTwoPi / 3), 3);
  EXPECT_EQ(max_arcs_extension(polygon(3), kTwoPi / 3), 3);
  EXPECT_EQ(max_arcs_extension(delta(Angle(0.0)), 0.1), 1);
  // Already maximal: 2K+1 arcs.
  double r = 4 * kPi / 5 + 0.01;
  EXPECT_EQ(max_arcs_extension(polygon(5), r), 5);
}

TEST(InClosure, Examples) {
  EXPECT_TRUE(in_closure_V(polygon(3), 1, kTwoPi / 3));
  Measure limit = make_measure({{kTwoPi / 3, 0.5}, {2 * kTwoPi / 3, 0.5}});
  EXPECT_TRUE(in_closure_V(limit, 1, kTwoPi / 3));
  EXPECT_TRUE(in_closure_V(limit, 0, kTwoPi / 3));
  EXPECT_FALSE(in_closure_V(delta(Angle(0.0)), 1, 0.1));
  EXPECT_FALSE(in_closure_V(polygon(3), 0, kTwoPi / 3));
}

TEST(ArcMassForm, InteriorWeightsAreArcMasses) {
  ArcMassForm f = arc_mass_form(polygon(3), 1, kTwoPi / 3);
  ASSERT_EQ(f.components.size(), 3u);
  for (const ArcComponent& c : f.components) EXPECT_NEAR(c.weight, 1.0 / 3, 1e-15);
}

TEST(ArcMassForm, BoundaryMeasureHasZeroWeight) {
  Measure limit = make_measure({{kTwoPi / 3, 0.5}, {2 * kTwoPi / 3, 0.5}});
  ArcMassForm f = arc_mass_form(limit, 1, kTwoPi / 3);
  ASSERT_EQ(f.components.size(), 3u);
  int zeros = 0;
  for (const ArcComponent& c : f.components) zeros += c.weight == 0.0;
  EXPECT_EQ(zeros, 1);
  EXPECT_TRUE(same_atoms(f.combine(), limit, 1e-12, 1e-15));
  EXPECT_THROW(arc_mass_form(delta(Angle(0.0)), 1, 0.1), MembershipError);
}

TEST(ExtensionWitness, ReachesEveryOddTarget) {
  Measure mu = delta(Angle(1.0));
  double r = 8 * kPi / 9 + 0.01;  // K = 4
  int ext = max_arcs_extension(mu, r);
  EXPECT_EQ(ext, 9);
  std::vector<Angle> s = mu.support();
  for (int target = 1; target <= ext; target += 2) {
    std::vector<Angle> w = extension_witness(s, r, target);
    std::vector<double> m(w.size(), 0.0);
    m[0] = 1.0;
    EXPECT_LE(support_diameter(w), r + 1e-9);
    EXPECT_EQ(static_cast<int>(arc_decomposition(w, m, r).count()), target);
  }
  EXPECT_THROW(extension_witness(s, r, 11), MembershipError);
  EXPECT_THROW(extension_witness(s, r, 2), MembershipError);
}
