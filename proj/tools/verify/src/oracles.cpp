#include "vrm/verify/oracles.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace vrm::verify {

GridCase random_grid_case(Rng& rng, int grid, int max_atoms) {
  GridCase c;
  c.grid = grid;
  const int half = grid / 2;
  int count = uniform_int(rng, 1, max_atoms);
  int first = uniform_int(rng, 0, grid - 1);
  c.atoms.push_back(first);
  // Extra atoms stay within a half turn of the first so that the diameter is below pi.
  for (int i = 1; i < count; ++i) c.atoms.push_back((first + uniform_int(rng, -(half - 2) / 2, (half - 2) / 2) + grid) % grid);
  std::sort(c.atoms.begin(), c.atoms.end());
  c.atoms.erase(std::unique(c.atoms.begin(), c.atoms.end()), c.atoms.end());
  int diam = 0;
  for (int a : c.atoms) {
    for (int b : c.atoms) {
      int d = std::abs(a - b);
      diam = std::max(diam, std::min(d, grid - d));
    }
  }
  c.spacing = uniform_int(rng, 1, half - diam);
  c.r = kPi - kTwoPi * c.spacing / grid;
  std::vector<Atom> atoms;
  for (int a : c.atoms) atoms.push_back({Angle(kTwoPi * a / grid), uniform(rng, 0.1, 1.0)});
  c.measure = Measure::from_atoms(std::move(atoms), true);
  return c;
}

GridSearch grid_max_arcs(const GridCase& c) {
  const int grid = c.grid;
  const int half = grid / 2;
  const int base = c.atoms.front();
  // forced[p]: -1 free, 0 blue, 1 red, for p in [0, half].
  std::vector<int> forced(static_cast<std::size_t>(half) + 1, -1);
  for (int a : c.atoms) {
    int u = ((a - base) % grid + grid) % grid;
    if (u < half) {
      forced[static_cast<std::size_t>(u)] = 0;
    } else if (u > half) {
      forced[static_cast<std::size_t>(u - half)] = 1;
    } else {
      throw std::logic_error("antipodal support on grid");
    }
  }
  forced[static_cast<std::size_t>(half)] = 1;

  // best[p][col]: most color changes on [0, p] with a colored point of color col at p.
  constexpr int kUnreachable = -1;
  std::vector<std::array<int, 2>> best(static_cast<std::size_t>(half) + 1, {kUnreachable, kUnreachable});
  std::vector<std::array<int, 2>> from(static_cast<std::size_t>(half) + 1, {-1, -1});
  best[0][0] = 0;
  for (int p = 0; p < half; ++p) {
    for (int col = 0; col < 2; ++col) {
      if (best[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)] == kUnreachable) continue;
      for (int q = p + 1; q <= half; ++q) {
        for (int nc = 0; nc < 2; ++nc) {
          int f = forced[static_cast<std::size_t>(q)];
          if (f >= 0 && f != nc) continue;
          if (nc != col && q - p < c.spacing) continue;
          int val = best[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)] + (nc != col);
          if (val > best[static_cast<std::size_t>(q)][static_cast<std::size_t>(nc)]) {
            best[static_cast<std::size_t>(q)][static_cast<std::size_t>(nc)] = val;
            from[static_cast<std::size_t>(q)][static_cast<std::size_t>(nc)] = p * 2 + col;
          }
        }
        if (forced[static_cast<std::size_t>(q)] >= 0) break;  // cannot skip a forced point
      }
    }
  }

  GridSearch out;
  out.best_arcs = best[static_cast<std::size_t>(half)][1];
  int p = half, col = 1;
  while (p > 0 || col != 0) {
    double u = kTwoPi * (base + p + (col == 1 ? half : 0)) / grid;
    out.witness.push_back(Angle(u));
    int prev = from[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)];
    p = prev / 2;
    col = prev % 2;
  }
  out.witness.push_back(Angle(kTwoPi * base / grid));
  return out;
}

}  // namespace vrm::verify
