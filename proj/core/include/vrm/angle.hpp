#pragma once

#include <numbers>
#include <utility>

namespace vrm {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Mass tolerance used for normalization and clamping.
inline constexpr double kTolMass = 1e-12;

// Angular tolerance, 1e-9 unless VRM_TOL_ANG is set. Read once.
double tol_ang();

// A point of the circle R / 2piZ stored by its representative in [0, 2pi).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians);

  double radians() const { return value_; }

  friend bool operator==(Angle a, Angle b);

 private:
  double value_ = 0.0;
};

Angle canonical_angle(double radians);
double geodesic_distance(Angle a, Angle b);
// Counter-clockwise travel from a to b, in [0, 2pi).
double ccw_distance(Angle from, Angle to);
Angle rotate(Angle a, double delta);
Angle antipode(Angle a);

// Chart x(p) = y0 + (theta - theta0) using the representative theta in (theta0, theta0 + 2pi).
struct CoordinateSystem {
  Angle theta0;
  double y0 = 0.0;
};

double chart_x(const CoordinateSystem& cs, Angle p);
Angle chart_tau(const CoordinateSystem& cs, double z);
std::pair<double, double> convert_charts(const CoordinateSystem& a, const CoordinateSystem& b, Angle p);

}  // namespace vrm
