#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "vrm/angle.hpp"

namespace vrm {

struct Atom {
  Angle position;
  double mass = 0.0;
};

// Finitely supported probability measure on the circle. Atoms are sorted by
// canonical angle, pairwise distinct and carry positive mass summing to 1.
class Measure {
 public:
  // Sorts, merges atoms closer than tol_ang() (wrap included), drops zero masses.
  static Measure from_atoms(std::vector<Atom> atoms, bool normalize = false);

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  std::vector<Angle> support() const;
  double total_mass() const;

  Measure rotated(double delta) const;

 private:
  std::vector<Atom> atoms_;
};

Measure make_measure(std::span<const std::pair<double, double>> pairs, bool normalize = false);
Measure make_measure(std::initializer_list<std::pair<double, double>> pairs, bool normalize = false);
Measure delta(Angle p);

double support_diameter(const Measure& mu);
double support_diameter(std::span<const Angle> points);

// Atom-wise equality: same atom count, positions within angle_tol, masses within mass_tol.
bool same_atoms(const Measure& a, const Measure& b, double angle_tol, double mass_tol);

}  // namespace vrm
