#include "vrm/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "vrm/angle.hpp"
#include "vrm/errors.hpp"

namespace vrm {

namespace {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

void validate_metric(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) throw ValidationError("distance matrix must have zero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(d(i, j)) || d(i, j) < 0.0) throw ValidationError("distances must be finite and non-negative");
      if (d(i, j) != d(j, i)) throw ValidationError("distance matrix must be symmetric");
    }
  }
}

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

// Symmetric difference of two sorted index lists.
void add_column(std::vector<std::size_t>& acc, const std::vector<std::size_t>& other) {
  std::vector<std::size_t> out;
  out.reserve(acc.size() + other.size());
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(out));
  acc.swap(out);
}

}  // namespace

std::vector<Bar> theoretical_barcode(int max_dim) {
  if (max_dim < 0) throw DomainError("max_dim must be non-negative");
  std::vector<Bar> bars{{0, 0.0, kInfinity}};
  for (int k = 0; 2 * k + 1 <= max_dim; ++k) {
    bars.push_back({2 * k + 1, 2.0 * k * kPi / (2.0 * k + 1.0), (2.0 * k + 2.0) * kPi / (2.0 * k + 3.0)});
  }
  return bars;
}

DistanceMatrix sample_circle(int n) {
  if (n < 3) throw SizeError("circle samples need n >= 3, got " + std::to_string(n));
  DistanceMatrix d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int step = std::abs(i - j);
      step = std::min(step, n - step);
      d(i, j) = kTwoPi * step / n;
    }
  }
  return d;
}

FiltrationComplex vr_filtration(const DistanceMatrix& d, int max_dim, std::size_t budget) {
  if (max_dim < 0) throw DomainError("max_dim must be non-negative");
  validate_metric(d);
  const std::size_t n = d.size();
  const std::size_t top = static_cast<std::size_t>(max_dim) + 2;  // vertices in the largest simplex
  double total = 0.0;
  for (std::size_t k = 1; k <= top; ++k) total += binomial(n, k);
  if (total > static_cast<double>(budget)) {
    throw BudgetError("filtration would contain " + std::to_string(static_cast<long long>(total)) +
                      " simplices, budget is " + std::to_string(budget));
  }

  FiltrationComplex fc;
  fc.max_dim = max_dim;
  fc.simplices.reserve(static_cast<std::size_t>(total));
  // Depth-first extension by larger vertices, carrying the running diameter.
  std::vector<int> stack;
  auto extend = [&](auto&& self, double value) -> void {
    fc.simplices.push_back({stack, value});
    if (stack.size() == top) return;
    for (std::size_t v = static_cast<std::size_t>(stack.back()) + 1; v < n; ++v) {
      double nv = value;
      for (int u : stack) nv = std::max(nv, d(static_cast<std::size_t>(u), v));
      stack.push_back(static_cast<int>(v));
      self(self, nv);
      stack.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    stack.assign(1, static_cast<int>(v));
    extend(extend, 0.0);
  }
  std::sort(fc.simplices.begin(), fc.simplices.end(), simplex_less);
  return fc;
}

std::vector<Bar> persistent_homology(const FiltrationComplex& fc, bool include_top) {
  const std::size_t m = fc.simplices.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) {
    if (!index.emplace(fc.simplices[i].vertices, i).second) throw ValidationError("duplicate simplex in filtration");
  }

  std::vector<std::vector<std::size_t>> columns(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Simplex& s = fc.simplices[j];
    if (s.vertices.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      std::vector<int> face;
      for (std::size_t q = 0; q < s.vertices.size(); ++q) {
        if (q != drop) face.push_back(s.vertices[q]);
      }
      auto it = index.find(face);
      if (it == index.end() || it->second >= j) throw ValidationError("face missing or ordered after its coface");
      if (fc.simplices[it->second].value > s.value) throw ValidationError("face value exceeds coface value");
      columns[j].push_back(it->second);
    }
    std::sort(columns[j].begin(), columns[j].end());
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_owner(m, kNone);
  std::vector<bool> is_low(m, false);
  std::vector<Bar> bars;
  for (std::size_t j = 0; j < m; ++j) {
    auto& col = columns[j];
    while (!col.empty() && pivot_owner[col.back()] != kNone) add_column(col, columns[pivot_owner[col.back()]]);
    if (col.empty()) continue;
    std::size_t i = col.back();
    pivot_owner[i] = j;
    is_low[i] = true;
    const Simplex& born = fc.simplices[i];
    if (fc.simplices[j].value > born.value) bars.push_back({born.dim(), born.value, fc.simplices[j].value});
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Simplex& s = fc.simplices[i];
    if (!columns[i].empty() || is_low[i]) continue;
    if (s.dim() <= fc.max_dim || include_top) bars.push_back({s.dim(), s.value, kInfinity});
  }
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
  });
  return bars;
}

bool BarcodeComparison::within_tolerance() const {
  if (!unmatched_computed.empty() || !unmatched_theoretical.empty()) return false;
  return std::all_of(matched.begin(), matched.end(),
                     [this](const MatchedBar& m) {
                       return m.birth_error <= tol + kEndpointSlack && m.death_error <= tol + kEndpointSlack;
                     });
}

BarcodeComparison compare_barcodes(std::span<const Bar> computed, std::span<const Bar> theoretical, double tol) {
  auto endpoint_error = [](double a, double b) {
    if (a == kInfinity && b == kInfinity) return 0.0;
    if (a == kInfinity || b == kInfinity) return kInfinity;
    return std::fabs(a - b);
  };
  struct Candidate {
    double cost;
    std::size_t c;
    std::size_t t;
  };
  std::vector<Candidate> candidates;
  for (std::size_t t = 0; t < theoretical.size(); ++t) {
    for (std::size_t c = 0; c < computed.size(); ++c) {
      if (computed[c].dim != theoretical[t].dim) continue;
      double cost = std::max(endpoint_error(computed[c].birth, theoretical[t].birth),
                             endpoint_error(computed[c].death, theoretical[t].death));
      if (cost < kInfinity) candidates.push_back({cost, c, t});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.cost < b.cost; });

  BarcodeComparison rep;
  rep.tol = tol;
  std::vector<bool> used_c(computed.size(), false), used_t(theoretical.size(), false);
  for (const Candidate& cand : candidates) {
    if (used_c[cand.c] || used_t[cand.t]) continue;
    used_c[cand.c] = used_t[cand.t] = true;
    const Bar& c = computed[cand.c];
    const Bar& t = theoretical[cand.t];
    rep.matched.push_back({c, t, endpoint_error(c.birth, t.birth), endpoint_error(c.death, t.death)});
  }
  for (std::size_t c = 0; c < computed.size(); ++c) {
    if (!used_c[c] && computed[c].length() > tol + kEndpointSlack) rep.unmatched_computed.push_back(computed[c]);
  }
  for (std::size_t t = 0; t < theoretical.size(); ++t) {
    if (!used_t[t]) rep.unmatched_theoretical.push_back(theoretical[t]);
  }
  return rep;
}

long euler_defect(const FiltrationComplex& fc, std::span<const Bar> bars_with_top, double v) {
  long simplices = 0;
  for (const Simplex& s : fc.simplices) {
    if (s.value <= v) simplices += s.dim() % 2 == 0 ? 1 : -1;
  }
  long alive = 0;
  for (const Bar& b : bars_with_top) {
    if (b.birth <= v && v < b.death) alive += b.dim % 2 == 0 ? 1 : -1;
  }
  return alive - simplices;
}

}  // namespace vrm
