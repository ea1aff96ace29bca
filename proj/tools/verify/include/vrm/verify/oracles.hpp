#pragma once

#include <vector>

#include "vrm/angle.hpp"
#include "vrm/measure.hpp"
#include "vrm/verify/random.hpp"

namespace vrm::verify {

// Support on the grid {2 pi i / grid} with r = pi - spacing * 2 pi / grid.
struct GridCase {
  int grid = 720;
  std::vector<int> atoms;
  int spacing = 1;
  Measure measure;
  double r = 0.0;
};

GridCase random_grid_case(Rng& rng, int grid = 720, int max_atoms = 3);

struct GridSearch {
  int best_arcs = 0;
  std::vector<Angle> witness;  // superset of the support reaching best_arcs
};

// Exhaustive search over supersets drawn from the grid, by dynamic programming over the
// half circle of colored points. Exact integer arithmetic throughout.
GridSearch grid_max_arcs(const GridCase& c);

}  // namespace vrm::verify
