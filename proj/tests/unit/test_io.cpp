#include <gtest/gtest.h>

#include "vrm/errors.hpp"
#include "vrm/io.hpp"

using namespace vrm;

TEST(Io, MeasureRoundTrip) {
  Measure mu = make_measure({{0.1, 0.25}, {2.0, 0.75}});
  Measure back = measure_from_json(to_json(mu));
  EXPECT_TRUE(same_atoms(mu, back, 0.0, 0.0));
  EXPECT_TRUE(same_atoms(parse_measure(to_json(mu).dump()), mu, 0.0, 0.0));
}

TEST(Io, DegreesAndNormalize) {
  Measure mu = parse_measure(R"({"atoms":[{"angle":180,"mass":2},{"angle":90,"mass":2}]})", true, true);
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_NEAR(mu[0].position.radians(), kPi / 2, 1e-15);
  EXPECT_NEAR(mu[1].position.radians(), kPi, 1e-15);
  EXPECT_DOUBLE_EQ(mu[0].mass, 0.5);
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(parse_measure("{"), ValidationError);
  EXPECT_THROW(parse_measure("[]"), ValidationError);
  EXPECT_THROW(parse_measure(R"({"atoms":[{"angle":"x","mass":1}]})"), ValidationError);
  EXPECT_THROW(parse_measure(R"({"atoms":[{"angle":0,"mass":0.5}]})"), ValidationError);
  EXPECT_THROW(parse_measure(R"({"atoms":[]})"), ValidationError);
}

TEST(Io, BarsRoundTrip) {
  std::vector<Bar> bars = theoretical_barcode(3);
  json j = to_json(std::span<const Bar>(bars));
  EXPECT_EQ(j[0]["death"], "inf");
  std::vector<Bar> back = bars_from_json(j);
  ASSERT_EQ(back.size(), bars.size());
  for (std::size_t i = 0; i < bars.size(); ++i) {
    EXPECT_EQ(back[i].dim, bars[i].dim);
    EXPECT_EQ(back[i].birth, bars[i].birth);
    EXPECT_EQ(back[i].death, bars[i].death);
  }
  EXPECT_THROW(bars_from_json(json::object()), ValidationError);
}

TEST(Io, ComparisonOutputs) {
  std::vector<Bar> computed{{1, kPi / 2, kPi}};
  std::vector<Bar> theory{{1, 0.0, kTwoPi / 3}};
  BarcodeComparison c = compare_barcodes(computed, theory, kPi / 2);
  json j = to_json(c);
  EXPECT_TRUE(j["within_tolerance"].get<bool>());
  EXPECT_EQ(j["matched"].size(), 1u);
  EXPECT_NE(comparison_table(c).find("agree"), std::string::npos);
}

TEST(Io, TrajectoryFormats) {
  Measure mu = make_measure({{0.0, 0.5}, {1.0, 0.5}});
  std::vector<Measure> frames{mu, delta(Angle(0.5))};
  std::string csv = trajectory_csv(frames);
  EXPECT_EQ(csv, "frame,t,atom_angle,atom_mass\n0,0,0,0.5\n0,0,1,0.5\n1,1,0.5,1\n");
  json j = trajectory_json(frames);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["t"], 1.0);
  EXPECT_EQ(j[1]["atoms"].size(), 1u);
}

TEST(Io, FormatReal) {
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(kInfinity), "inf");
  EXPECT_EQ(std::stod(format_real(kPi)), kPi);
}
