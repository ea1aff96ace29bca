#include "vrm/measure.hpp"

#include <algorithm>
#include <cmath>

#include "vrm/errors.hpp"

namespace vrm {

Measure Measure::from_atoms(std::vector<Atom> atoms, bool normalize) {
  double total = 0.0;
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.mass)) throw ValidationError("mass must be finite");
    if (a.mass < 0.0) throw ValidationError("mass must be non-negative");
    total += a.mass;
  }
  std::erase_if(atoms, [](const Atom& a) { return a.mass == 0.0; });
  if (atoms.empty() || total <= 0.0) throw ValidationError("measure needs at least one atom of positive mass");
  if (normalize) {
    for (Atom& a : atoms) a.mass /= total;
  } else if (std::fabs(total - 1.0) > kTolMass) {
    throw ValidationError("masses sum to " + std::to_string(total) + ", expected 1");
  }

  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& a, const Atom& b) { return a.position.radians() < b.position.radians(); });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const Atom& a : atoms) {
    if (!merged.empty() && a.position.radians() - merged.back().position.radians() < tol_ang()) {
      merged.back().mass += a.mass;
    } else {
      merged.push_back(a);
    }
  }
  if (merged.size() > 1 && geodesic_distance(merged.front().position, merged.back().position) < tol_ang()) {
    merged.front().mass += merged.back().mass;
    merged.pop_back();
  }

  Measure mu;
  mu.atoms_ = std::move(merged);
  return mu;
}

std::vector<Angle> Measure::support() const {
  std::vector<Angle> out;
  out.reserve(atoms_.size());
  for (const Atom& a : atoms_) out.push_back(a.position);
  return out;
}

double Measure::total_mass() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.mass;
  return s;
}

Measure Measure::rotated(double delta) const {
  std::vector<Atom> moved(atoms_.begin(), atoms_.end());
  for (Atom& a : moved) a.position = rotate(a.position, delta);
  return from_atoms(std::move(moved), true);
}

Measure make_measure(std::span<const std::pair<double, double>> pairs, bool normalize) {
  std::vector<Atom> atoms;
  atoms.reserve(pairs.size());
  for (const auto& [angle, mass] : pairs) atoms.push_back({Angle(angle), mass});
  return Measure::from_atoms(std::move(atoms), normalize);
}

Measure make_measure(std::initializer_list<std::pair<double, double>> pairs, bool normalize) {
  return make_measure(std::span<const std::pair<double, double>>(pairs.begin(), pairs.size()), normalize);
}

Measure delta(Angle p) { return Measure::from_atoms({{p, 1.0}}); }

double support_diameter(std::span<const Angle> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, geodesic_distance(points[i], points[j]));
    }
  }
  return best;
}

double support_diameter(const Measure& mu) {
  std::vector<Angle> s = mu.support();
  return support_diameter(s);
}

bool same_atoms(const Measure& a, const Measure& b, double angle_tol, double mass_tol) {
  if (a.size() != b.size()) return false;
  std::size_t n = a.size();
  // Wrap-around can shift the sorted order by one position.
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Atom& x = a[i];
      const Atom& y = b[(i + shift) % n];
      ok = geodesic_distance(x.position, y.position) <= angle_tol && std::fabs(x.mass - y.mass) <= mass_tol;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace vrm
