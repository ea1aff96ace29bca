#pragma once

#include <vector>

#include "vrm/arcs.hpp"
#include "vrm/measure.hpp"

namespace vrm {

// Point of the prism Delta^n x [0, 1] in barycentric coordinates.
struct BarycentricPoint {
  std::vector<double> coords;
  double t = 0.0;
};

// Throws ValidationError unless coords sum to 1, are >= -kTolMass and t lies in [0, 1].
void validate(const BarycentricPoint& p);

// Projection from (barycenter, 2) onto Delta^n x {0} union (boundary of Delta^n) x [0, 1].
BarycentricPoint radial_retraction(const BarycentricPoint& p);

struct RhoResult {
  Measure measure;
  double t = 0.0;
  std::vector<double> weights;
};

RhoResult rho_retraction(const ArcMassForm& form, double t);
RhoResult rho_retraction(const Measure& mu, double t, int k, double r);

}  // namespace vrm
