#include "vrm/retraction.hpp"

#include <algorithm>
#include <cmath>

#include "vrm/errors.hpp"

namespace vrm {

void validate(const BarycentricPoint& p) {
  if (p.coords.empty()) throw ValidationError("barycentric point needs at least one coordinate");
  double sum = 0.0;
  for (double c : p.coords) {
    if (!std::isfinite(c) || c < -kTolMass) throw ValidationError("barycentric coordinates must be non-negative");
    sum += c;
  }
  if (std::fabs(sum - 1.0) > kTolMass * static_cast<double>(p.coords.size())) {
    throw ValidationError("barycentric coordinates must sum to 1");
  }
  if (!std::isfinite(p.t) || p.t < 0.0 || p.t > 1.0) throw ValidationError("prism height must lie in [0, 1]");
}

BarycentricPoint radial_retraction(const BarycentricPoint& p) {
  validate(p);
  const double c = 1.0 / static_cast<double>(p.coords.size());
  double s = 2.0 / (2.0 - p.t);
  for (double a : p.coords) {
    if (a < c) s = std::min(s, c / (c - std::max(a, 0.0)));
  }
  BarycentricPoint out;
  out.coords.reserve(p.coords.size());
  for (double a : p.coords) {
    double v = c + s * (std::max(a, 0.0) - c);
    out.coords.push_back(std::fabs(v) <= kTolMass ? 0.0 : v);
  }
  out.t = 2.0 + s * (p.t - 2.0);
  if (std::fabs(out.t) <= kTolMass) out.t = 0.0;
  return out;
}

RhoResult rho_retraction(const ArcMassForm& form, double t) {
  BarycentricPoint p;
  for (const ArcComponent& c : form.components) p.coords.push_back(c.weight);
  p.t = t;
  BarycentricPoint q = radial_retraction(p);

  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < form.components.size(); ++i) {
    if (q.coords[i] <= 0.0) continue;
    for (const Atom& a : form.components[i].part.atoms()) atoms.push_back({a.position, a.mass * q.coords[i]});
  }
  return {Measure::from_atoms(std::move(atoms), true), q.t, q.coords};
}

RhoResult rho_retraction(const Measure& mu, double t, int k, double r) {
  if (k < 1) throw DomainError("rho retraction needs k >= 1");
  return rho_retraction(arc_mass_form(mu, k, r), t);
}

}  // namespace vrm
