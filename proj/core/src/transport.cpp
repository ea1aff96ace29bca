#include "vrm/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vrm/errors.hpp"

namespace vrm {

namespace {

constexpr double kPivotEps = 1e-12;

// Dense tableau for min c.x s.t. A x = b, x >= 0, b >= 0, solved in two phases
// with Bland's rule.
class Simplex {
 public:
  Simplex(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double> c)
      : rows_(a.size()), vars_(c.size()), cost_(std::move(c)) {
    cols_ = vars_ + rows_ + 1;
    tab_.assign((rows_ + 1) * cols_, 0.0);
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < vars_; ++j) at(i, j) = a[i][j];
      at(i, vars_ + i) = 1.0;
      at(i, cols_ - 1) = b[i];
      basis_[i] = vars_ + i;
    }
  }

  std::vector<double> solve() {
    // Phase I: minimize the sum of artificials.
    for (std::size_t j = 0; j < cols_; ++j) at(rows_, j) = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j < vars_ || j == cols_ - 1) at(rows_, j) -= at(i, j);
      }
    }
    iterate(vars_ + rows_);
    if (-at(rows_, cols_ - 1) > 1e-9) throw ValidationError("transportation problem is infeasible");

    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) continue;
      for (std::size_t j = 0; j < vars_; ++j) {
        if (std::fabs(at(i, j)) > kPivotEps) {
          pivot(i, j);
          break;
        }
      }
    }

    // Phase II over the original variables only.
    for (std::size_t j = 0; j < cols_; ++j) at(rows_, j) = j < vars_ ? cost_[j] : 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      std::size_t bv = basis_[i];
      if (bv >= vars_) continue;
      double f = at(rows_, bv);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) at(rows_, j) -= f * at(i, j);
    }
    iterate(vars_);

    std::vector<double> x(vars_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) x[basis_[i]] = std::max(0.0, at(i, cols_ - 1));
    }
    return x;
  }

 private:
  double& at(std::size_t i, std::size_t j) { return tab_[i * cols_ + j]; }

  void iterate(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (at(rows_, j) < -kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, enter) > kPivotEps) best = std::min(best, at(i, cols_ - 1) / at(i, enter));
      }
      std::size_t leave = rows_;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, enter) <= kPivotEps || at(i, cols_ - 1) / at(i, enter) > best + kPivotEps) continue;
        if (leave == rows_ || basis_[i] < basis_[leave]) leave = i;
      }
      if (leave == rows_) throw ValidationError("transportation problem is unbounded");
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    double p = at(r, c);
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) /= p;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    basis_[r] = c;
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t cols_ = 0;
  std::vector<double> cost_;
  std::vector<double> tab_;
  std::vector<std::size_t> basis_;
};

}  // namespace

double matching_cost(const Matching& kappa, const Measure& mu, const Measure& nu) {
  std::vector<double> rows(mu.size(), 0.0);
  std::vector<double> cols(nu.size(), 0.0);
  double cost = 0.0;
  for (const Flow& f : kappa.entries) {
    if (f.source >= mu.size() || f.target >= nu.size()) throw ValidationError("matching index out of range");
    if (!(f.amount >= -kTolMass)) throw ValidationError("matching flow must be non-negative");
    rows[f.source] += f.amount;
    cols[f.target] += f.amount;
    cost += f.amount * geodesic_distance(mu[f.source].position, nu[f.target].position);
  }
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (std::fabs(rows[i] - mu[i].mass) > kTolMass) throw ValidationError("matching row sum differs from source mass");
  }
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (std::fabs(cols[j] - nu[j].mass) > kTolMass) throw ValidationError("matching column sum differs from target mass");
  }
  return cost;
}

TransportPlan wasserstein_lp(const Measure& mu, const Measure& nu, std::size_t atom_cap) {
  std::size_t m = mu.size();
  std::size_t n = nu.size();
  if (m + n > atom_cap) {
    throw SizeError("LP transport needs at most " + std::to_string(atom_cap) + " atoms, got " + std::to_string(m + n));
  }
  TransportPlan plan;
  if (same_atoms(mu, nu, 0.0, 0.0)) {
    for (std::size_t i = 0; i < m; ++i) plan.matching.entries.push_back({i, i, mu[i].mass});
    return plan;
  }

  // Row constraints for every source, column constraints for all but the last target.
  std::size_t rows = m + n - 1;
  std::vector<std::vector<double>> a(rows, std::vector<double>(m * n, 0.0));
  std::vector<double> b(rows, 0.0);
  std::vector<double> c(m * n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t v = i * n + j;
      c[v] = geodesic_distance(mu[i].position, nu[j].position);
      a[i][v] = 1.0;
      if (j + 1 < n) a[m + j][v] = 1.0;
    }
    b[i] = mu[i].mass;
  }
  for (std::size_t j = 0; j + 1 < n; ++j) b[m + j] = nu[j].mass;

  std::vector<double> x = Simplex(std::move(a), std::move(b), c).solve();
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v] > 0.0) {
      plan.matching.entries.push_back({v / n, v % n, x[v]});
      plan.distance += x[v] * c[v];
    }
  }
  return plan;
}

double wasserstein_circle(const Measure& mu, const Measure& nu) {
  struct Event {
    double pos;
    double delta;
  };
  std::vector<Event> events;
  events.reserve(mu.size() + nu.size());
  for (const Atom& a : mu.atoms()) events.push_back({a.position.radians(), a.mass});
  for (const Atom& a : nu.atoms()) events.push_back({a.position.radians(), -a.mass});
  std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) { return x.pos < y.pos; });

  // G is constant on [events[i].pos, events[i+1].pos); the final piece wraps to 2pi.
  struct Piece {
    double value;
    double length;
  };
  std::vector<Piece> pieces;
  double g = 0.0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    g += events[i].delta;
    double next = i + 1 < events.size() ? events[i + 1].pos : events.front().pos + kTwoPi;
    double len = next - events[i].pos;
    if (len > 0.0) pieces.push_back({g, len});
  }
  if (pieces.empty()) return 0.0;

  std::vector<Piece> sorted = pieces;
  std::sort(sorted.begin(), sorted.end(), [](const Piece& x, const Piece& y) { return x.value < y.value; });
  double half = 0.0;
  for (const Piece& p : sorted) half += p.length;
  half /= 2.0;
  double acc = 0.0;
  double median = sorted.back().value;
  for (const Piece& p : sorted) {
    acc += p.length;
    if (acc >= half) {
      median = p.value;
      break;
    }
  }
  double w = 0.0;
  for (const Piece& p : pieces) w += p.length * std::fabs(p.value - median);
  return w;
}

}  // namespace vrm
