#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vrm/angle.hpp"
#include "vrm/measure.hpp"

namespace vrm {

// Closed arc [start, start + length] traversed counter-clockwise.
struct Arc {
  Angle start;
  double length = 0.0;
  double mass = 0.0;

  Angle end() const { return rotate(start, length); }
  bool contains(Angle p, double slack) const;
};

struct OpenArc {
  Angle start;
  double length = 0.0;

  bool contains(Angle p) const;
};

struct ArcDecomposition {
  double r = 0.0;
  std::vector<Arc> arcs;         // counter-clockwise, first arc holds the smallest-angle atom
  std::vector<OpenArc> excluded; // merged excluded region
  std::vector<std::size_t> atom_arc; // arc index of every support point, in input order

  std::size_t count() const { return arcs.size(); }
  int k() const { return static_cast<int>(arcs.size() / 2); }
  std::optional<std::size_t> arc_of(Angle p) const;
};

// Throws ScaleError / ContractibleRegimeError unless 0 <= r < pi.
void check_scale(double r);

std::vector<OpenArc> excluded_region(const Measure& mu, double r);
ArcDecomposition arc_decomposition(const Measure& mu, double r);
// Decomposition of a bare point set; masses may be zero. Points closer than tol_ang() are identified.
ArcDecomposition arc_decomposition(std::span<const Angle> points, std::span<const double> masses, double r);

int arcs_count(const Measure& mu, double r);
int classify(const Measure& mu, double r);
int max_k(double r);

bool alternation_check(std::span<const Angle> blue, double r);
int degree_arc_count(std::span<const Angle> support, double r);

int max_arcs_extension(const Measure& mu, double r);
int max_arcs_extension(std::span<const Angle> support, double r);
// Superset T of the support with diam(T) <= r and exactly target_arcs arcs.
std::vector<Angle> extension_witness(std::span<const Angle> support, double r, int target_arcs);

bool in_closure_V(const Measure& mu, int k, double r);

struct ArcComponent {
  Measure part;  // normalized restriction of mu to the arc, or a delta inside the arc when weight is 0
  double weight = 0.0;
  Arc arc;
};

struct ArcMassForm {
  int k = 0;
  double r = 0.0;
  std::vector<ArcComponent> components;
  std::vector<Angle> witness;

  Measure combine() const;
};

ArcMassForm arc_mass_form(const Measure& mu, int k, double r);

}  // namespace vrm
