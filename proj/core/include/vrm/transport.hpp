#pragma once

#include <cstddef>
#include <vector>

#include "vrm/measure.hpp"

namespace vrm {

struct Flow {
  std::size_t source = 0;
  std::size_t target = 0;
  double amount = 0.0;
};

struct Matching {
  std::vector<Flow> entries;
};

struct TransportPlan {
  double distance = 0.0;
  Matching matching;
};

inline constexpr std::size_t kDefaultAtomCap = 64;

double matching_cost(const Matching& kappa, const Measure& mu, const Measure& nu);

// Exact W1 by solving the transportation LP with a dense simplex.
TransportPlan wasserstein_lp(const Measure& mu, const Measure& nu, std::size_t atom_cap = kDefaultAtomCap);

// Exact W1 on the circle from the cumulative difference function and its weighted median.
double wasserstein_circle(const Measure& mu, const Measure& nu);

}  // namespace vrm
