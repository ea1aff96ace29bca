#include "vrm/angle.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "vrm/errors.hpp"

namespace vrm {

namespace {

double read_tol_ang() {
  if (const char* env = std::getenv("VRM_TOL_ANG")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && std::isfinite(v) && v >= 0.0) return v;
  }
  return 1e-9;
}

}  // namespace

double tol_ang() {
  static const double value = read_tol_ang();
  return value;
}

Angle::Angle(double radians) {
  if (!std::isfinite(radians)) throw DomainError("angle must be finite");
  double v = std::fmod(radians, kTwoPi);
  if (v < 0.0) v += kTwoPi;
  if (v >= kTwoPi) v = 0.0;
  value_ = v;
}

bool operator==(Angle a, Angle b) { return geodesic_distance(a, b) < tol_ang(); }

Angle canonical_angle(double radians) { return Angle(radians); }

double geodesic_distance(Angle a, Angle b) {
  double d = std::fabs(a.radians() - b.radians());
  return d > kPi ? kTwoPi - d : d;
}

double ccw_distance(Angle from, Angle to) {
  double d = to.radians() - from.radians();
  if (d < 0.0) d += kTwoPi;
  if (d >= kTwoPi) d = 0.0;
  return d;
}

Angle rotate(Angle a, double delta) { return Angle(a.radians() + delta); }

Angle antipode(Angle a) { return Angle(a.radians() + kPi); }

double chart_x(const CoordinateSystem& cs, Angle p) {
  double d = ccw_distance(cs.theta0, p);
  if (d < tol_ang() || d > kTwoPi - tol_ang()) {
    throw ExcludedPointError("point " + std::to_string(p.radians()) + " is the base point of the chart");
  }
  return cs.y0 + d;
}

Angle chart_tau(const CoordinateSystem& cs, double z) {
  if (!std::isfinite(z)) throw DomainError("chart value must be finite");
  return Angle(z + cs.theta0.radians() - cs.y0);
}

std::pair<double, double> convert_charts(const CoordinateSystem& a, const CoordinateSystem& b, Angle p) {
  return {chart_x(a, p), chart_x(b, p)};
}

}  // namespace vrm
