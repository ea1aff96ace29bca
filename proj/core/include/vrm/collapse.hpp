#pragma once

#include <cstddef>
#include <vector>

#include "vrm/angle.hpp"
#include "vrm/arcs.hpp"
#include "vrm/measure.hpp"

namespace vrm {

// Deterministic coordinate: theta0 = antipode of the heaviest atom (ties: smallest angle), y0 = 0.
CoordinateSystem admissible_coordinate(const Measure& mu, double r);

// Coordinate in which no mass crosses theta0 during the collapse, so the chart mean is conserved.
CoordinateSystem transport_safe_coordinate(const Measure& mu, double r);

// Index of the arc holding p, counting counter-clockwise from theta0. theta0 must lie in no arc.
int arc_index_v(const ArcDecomposition& decomp, const CoordinateSystem& cs, Angle p);

// Collapse of a measure in V_{2k+1}(r) onto a regular polygonal measure. Everything that does
// not depend on t is computed once at construction.
class Collapse {
 public:
  Collapse(const Measure& mu, double r);
  // theta0 must avoid the convex hull of every arc's atoms.
  Collapse(const Measure& mu, double r, const CoordinateSystem& cs);

  int k() const { return decomp_.k(); }
  const Measure& measure() const { return mu_; }
  const ArcDecomposition& decomposition() const { return decomp_; }
  const CoordinateSystem& coordinates() const { return cs_; }
  double offset() const { return m_; }
  int arc_index(std::size_t atom) const { return v_[atom]; }
  double chart_value(std::size_t atom) const { return x_[atom]; }
  // Chart value that every atom of arc v reaches at t = 1.
  double target(int v) const;

  Angle point(std::size_t atom, double t) const;
  Measure at(double t) const;

 private:
  void build();

  Measure mu_;
  double r_;
  ArcDecomposition decomp_;
  CoordinateSystem cs_;
  std::vector<double> x_;
  std::vector<int> v_;
  double m_ = 0.0;
};

double arc_offset_m(const Measure& mu, int k, const CoordinateSystem& cs, double r);
Angle collapse_point(Angle p, const Measure& mu, double t, double r);
Angle collapse_point(Angle p, const Measure& mu, double t, double r, const CoordinateSystem& cs);
Measure collapse_measure(const Measure& mu, double t, double r);
std::vector<Measure> trajectory(const Measure& mu, double r, int steps);
Measure canonical_collapse(const Measure& mu, double r);

}  // namespace vrm
