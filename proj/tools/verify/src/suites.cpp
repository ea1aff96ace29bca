#include "vrm/verify/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vrm/vrm.hpp"
#include "vrm/verify/oracles.hpp"
#include "vrm/verify/random.hpp"

namespace vrm::verify {

namespace {

class Checks {
 public:
  Checks(std::string suite, const SuiteOptions& opts) : suite_(std::move(suite)), opts_(opts) {}

  // Numeric check: passes when error <= tolerance.
  void error(const std::string& name, double err, double tolerance) {
    CheckResult& c = entry(name, opts_.tol.value_or(tolerance));
    ++c.trials;
    if (std::isnan(err)) err = INFINITY;
    c.max_error = std::max(c.max_error, err);
    if (!(err <= c.tolerance)) ++c.failures;
  }

  void boolean(const std::string& name, bool ok) {
    CheckResult& c = entry(name, 0.0);
    ++c.trials;
    if (!ok) ++c.failures;
  }

  std::vector<CheckResult> results() const {
    std::vector<CheckResult> out;
    for (const std::string& n : order_) out.push_back(map_.at(n));
    return out;
  }

 private:
  CheckResult& entry(const std::string& name, double tolerance) {
    auto it = map_.find(name);
    if (it == map_.end()) {
      order_.push_back(name);
      it = map_.emplace(name, CheckResult{suite_, name, 0, 0, 0.0, tolerance}).first;
    }
    return it->second;
  }

  std::string suite_;
  const SuiteOptions& opts_;
  std::vector<std::string> order_;
  std::map<std::string, CheckResult> map_;
};

std::uint64_t suite_seed(std::uint64_t seed, std::uint64_t salt) { return seed * 0x9E3779B97F4A7C15ull + salt; }

double cyclic_mass_error(const ArcDecomposition& a, const ArcDecomposition& b) {
  if (a.count() != b.count()) return INFINITY;
  double best = INFINITY;
  for (std::size_t s = 0; s < a.count(); ++s) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.count(); ++i) {
      worst = std::max(worst, std::fabs(a.arcs[i].mass - b.arcs[(i + s) % b.count()].mass));
    }
    best = std::min(best, worst);
  }
  return best;
}

std::vector<CheckResult> transport_suite(const SuiteOptions& opts) {
  Checks c("transport", opts);
  const std::uint64_t seed = suite_seed(opts.seed, 1);
  for (long i = 0; i < opts.iters; ++i) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(i));
    Measure a = random_measure(rng, 6), b = random_measure(rng, 6), d = random_measure(rng, 6);
    double ab = wasserstein_circle(a, b);
    TransportPlan plan = wasserstein_lp(a, b);
    c.error("circle_equals_lp", std::fabs(ab - plan.distance), 1e-9);
    c.error("lp_plan_attains_distance", std::fabs(matching_cost(plan.matching, a, b) - plan.distance), 1e-12);
    c.boolean("symmetry_exact", ab == wasserstein_circle(b, a));
    double ad = wasserstein_circle(a, d), db = wasserstein_circle(d, b);
    c.error("triangle_inequality", std::max(0.0, ab - ad - db), 1e-9);
    c.error("identity_zero", wasserstein_circle(a, a), 1e-9);
    double alpha = uniform(rng, 0.0, kTwoPi);
    c.error("rotation_invariance", std::fabs(wasserstein_circle(a.rotated(alpha), b.rotated(alpha)) - ab), 1e-9);
    Angle p(uniform(rng, 0.0, kTwoPi)), q(uniform(rng, 0.0, kTwoPi));
    c.error("delta_distance", std::fabs(wasserstein_circle(delta(p), delta(q)) - geodesic_distance(p, q)), 1e-9);
  }
  return c.results();
}

std::vector<CheckResult> arcs_suite(const SuiteOptions& opts) {
  Checks c("arcs", opts);
  const std::uint64_t seed = suite_seed(opts.seed, 2);
  const double tol = tol_ang();
  for (long i = 0; i < opts.iters; ++i) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(i));
    double r = random_scale(rng);
    Measure mu = random_thickening_measure(rng, r);
    ArcDecomposition dec = arc_decomposition(mu, r);
    int arcs = static_cast<int>(dec.count());
    c.boolean("odd_count", arcs % 2 == 1);
    c.boolean("count_within_max_k", arcs <= 2 * max_k(r) + 1);

    double sep_err = 0.0;
    for (std::size_t a = 0; a < dec.count(); ++a) {
      const Arc& cur = dec.arcs[a];
      const Arc& next = dec.arcs[(a + 1) % dec.count()];
      double gap = dec.count() == 1 ? kTwoPi - cur.length : ccw_distance(cur.end(), next.start);
      sep_err = std::max(sep_err, 2.0 * (kPi - r) - tol - gap);
    }
    c.error("separation", std::max(0.0, sep_err), 0.0);

    double mass = 0.0;
    for (const Arc& a : dec.arcs) mass += a.mass;
    c.error("arc_masses_sum_to_one", std::fabs(mass - 1.0), 1e-12);
    bool exactly_one = true;
    for (const Atom& a : mu.atoms()) {
      int holders = 0;
      for (const Arc& arc : dec.arcs) holders += arc.contains(a.position, tol);
      exactly_one &= holders == 1;
    }
    c.boolean("atom_in_exactly_one_arc", exactly_one);

    std::vector<Angle> support = mu.support();
    c.boolean("degree_equals_arcs", degree_arc_count(support, r) == arcs);

    // One point per arc alternates with its antipodes.
    std::vector<Angle> reps(dec.count());
    for (std::size_t j = 0; j < mu.size(); ++j) reps[dec.atom_arc[j]] = mu[j].position;
    c.boolean("alternation_one_per_arc", alternation_check(reps, r));

    double diam = support_diameter(mu);
    bool monotone = true;
    int prev = 0;
    for (int g = 0; g <= 8; ++g) {
      int cnt = arcs_count(mu, diam + (kPi - diam) * g / 9.0);
      monotone &= cnt >= prev;
      prev = cnt;
    }
    c.boolean("monotone_in_r", monotone);

    int ext = max_arcs_extension(mu, r);
    int k = arcs / 2;
    bool closure = in_closure_V(mu, k, r) && ext % 2 == 1 && ext >= arcs;
    for (int kk = 0; 2 * kk + 1 <= ext + 4; ++kk) {
      if (2 * kk + 1 > ext) closure &= !in_closure_V(mu, kk, r);
    }
    c.boolean("closure_consistency", closure);

    int target = 2 * uniform_int(rng, k, std::min((ext - 1) / 2, k + 4)) + 1;
    std::vector<Angle> wit = extension_witness(support, r, target);
    bool witness_ok = support_diameter(wit) <= r + tol;
    std::vector<double> zero(wit.size(), 0.0);
    zero[0] = 1.0;
    witness_ok &= static_cast<int>(arc_decomposition(wit, zero, r).count()) == target;
    c.boolean("extension_witness", witness_ok);

    ArcMassForm form = arc_mass_form(mu, target / 2, r);
    c.error("mass_form_recombines", wasserstein_circle(form.combine(), mu), 1e-9);
    if (target == arcs) {
      double werr = 0.0;
      for (std::size_t a = 0; a < dec.count(); ++a) werr = std::max(werr, std::fabs(form.components[a].weight - dec.arcs[a].mass));
      c.error("mass_form_weights_are_arc_masses", werr, 1e-12);
    }
  }

  long grid_iters = std::min<long>(opts.iters, 200);
  const std::uint64_t gseed = suite_seed(opts.seed, 3);
  for (long i = 0; i < grid_iters; ++i) {
    Rng rng = trial_rng(gseed, static_cast<std::uint64_t>(i));
    GridCase g = random_grid_case(rng);
    GridSearch s = grid_max_arcs(g);
    int ext = max_arcs_extension(g.measure, g.r);
    c.boolean("grid_search_equals_extension_bound", s.best_arcs == ext);
    std::vector<double> w(s.witness.size(), 0.0);
    w[0] = 1.0;
    c.boolean("grid_witness_realizes_count",
              static_cast<int>(arc_decomposition(s.witness, w, g.r).count()) == s.best_arcs);
  }
  return c.results();
}

std::vector<CheckResult> collapse_suite(const SuiteOptions& opts) {
  Checks c("collapse", opts);
  const std::uint64_t seed = suite_seed(opts.seed, 4);
  for (long i = 0; i < opts.iters; ++i) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(i));
    double r = random_scale(rng);
    Measure mu = random_thickening_measure(rng, r);
    double t = uniform(rng, 0.0, 1.0);
    Collapse col(mu, r);
    Measure end = col.at(1.0);
    Measure mid = col.at(t);

    CoordinateSystem cs = col.coordinates();
    bool excluded = false;
    for (const OpenArc& e : excluded_region(mu, r)) excluded |= e.contains(cs.theta0);
    c.boolean("admissible_coordinate_excluded", excluded);

    c.error("idempotence", wasserstein_circle(canonical_collapse(mid, r), end), 1e-8);

    RegularPolygonalMeasure poly = polygonal_form(end, col.k());
    double spacing = 0.0;
    for (std::size_t a = 0; a < end.size(); ++a) {
      double gap = ccw_distance(end[a].position, end[(a + 1) % end.size()].position);
      if (end.size() > 1) spacing = std::max(spacing, std::fabs(gap - poly.period()));
    }
    c.error("endpoint_evenly_spaced", spacing, 1e-9);

    ArcDecomposition dec = col.decomposition();
    std::vector<Measure> frames = trajectory(mu, r, 16);
    double diam_err = 0.0, mass_err = 0.0;
    bool count_const = true;
    for (const Measure& f : frames) {
      diam_err = std::max(diam_err, support_diameter(f) - r);
      ArcDecomposition fd = arc_decomposition(f, r);
      count_const &= fd.count() == dec.count();
      mass_err = std::max(mass_err, cyclic_mass_error(dec, fd));
    }
    c.error("diameter_preserved", std::max(0.0, diam_err), 1e-9);
    c.boolean("arc_count_constant", count_const);
    c.error("arc_masses_conserved", mass_err, 1e-10);

    // Another admissible coordinate: a random point of the excluded region, random y0.
    std::vector<OpenArc> ex = excluded_region(mu, r);
    const OpenArc& pick = ex[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(ex.size()) - 1))];
    CoordinateSystem other{rotate(pick.start, pick.length * uniform(rng, 0.1, 0.9)), uniform(rng, -10.0, 10.0)};
    c.error("coordinate_independence", wasserstein_circle(Collapse(mu, r, other).at(t), mid), 1e-9);

    CoordinateSystem safe = transport_safe_coordinate(mu, r);
    Collapse sc(mu, r, safe);
    double mean0 = 0.0;
    for (std::size_t a = 0; a < mu.size(); ++a) mean0 += mu[a].mass * sc.chart_value(a);
    double mean_err = 0.0;
    for (int s = 0; s <= 8; ++s) {
      double ts = s / 8.0;
      double mean = 0.0;
      for (std::size_t a = 0; a < mu.size(); ++a) mean += mu[a].mass * chart_x(safe, sc.point(a, ts));
      mean_err = std::max(mean_err, std::fabs(mean - mean0));
    }
    c.error("chart_mean_conserved", mean_err, 1e-9);

    double alpha = uniform(rng, 0.0, kTwoPi);
    c.error("rotation_equivariance", wasserstein_circle(canonical_collapse(mu.rotated(alpha), r), end.rotated(alpha)),
            1e-9);

    if (i % 10 == 0) {
      std::vector<Measure> fine = trajectory(mu, r, 256);
      double travel = 0.0;
      for (std::size_t a = 0; a < mu.size(); ++a) {
        travel = std::max(travel, std::fabs(col.target(col.arc_index(a)) - col.chart_value(a)));
      }
      double lip = 0.0, mono = 0.0;
      double prev = wasserstein_circle(fine[0], end);
      for (std::size_t f = 1; f < fine.size(); ++f) {
        lip = std::max(lip, wasserstein_circle(fine[f - 1], fine[f]) - travel / 255.0);
        double cur = wasserstein_circle(fine[f], end);
        mono = std::max(mono, cur - prev);
        prev = cur;
      }
      c.error("frame_steps_lipschitz", std::max(0.0, lip), 1e-12);
      c.error("distance_to_endpoint_nonincreasing", std::max(0.0, mono), 1e-12);
    }
  }
  return c.results();
}

std::vector<CheckResult> retraction_suite(const SuiteOptions& opts) {
  Checks c("retraction", opts);
  const std::uint64_t seed = suite_seed(opts.seed, 5);
  for (long i = 0; i < opts.iters; ++i) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(i));
    int n = 2 * uniform_int(rng, 1, 3);
    BarycentricPoint p{random_simplex_point(rng, n), coin(rng, 0.125) ? 0.0 : uniform(rng, 0.0, 1.0)};
    BarycentricPoint q = radial_retraction(p);
    double min_coord = *std::min_element(q.coords.begin(), q.coords.end());
    c.boolean("target_membership", q.t == 0.0 || min_coord == 0.0);

    BarycentricPoint qq = radial_retraction(q);
    double idem = std::fabs(qq.t - q.t);
    for (std::size_t j = 0; j < q.coords.size(); ++j) idem = std::max(idem, std::fabs(qq.coords[j] - q.coords[j]));
    c.error("idempotent", idem, 1e-9);

    bool on_target = p.t == 0.0 || *std::min_element(p.coords.begin(), p.coords.end()) == 0.0;
    if (on_target) {
      double fix = std::fabs(q.t - p.t);
      for (std::size_t j = 0; j < p.coords.size(); ++j) fix = std::max(fix, std::fabs(q.coords[j] - p.coords[j]));
      c.error("target_fixed", fix, 1e-12);
    }

    std::vector<std::size_t> perm(p.coords.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    BarycentricPoint pp{std::vector<double>(p.coords.size()), p.t};
    for (std::size_t j = 0; j < perm.size(); ++j) pp.coords[j] = p.coords[perm[j]];
    BarycentricPoint pq = radial_retraction(pp);
    double perr = std::fabs(pq.t - q.t);
    for (std::size_t j = 0; j < perm.size(); ++j) perr = std::max(perr, std::fabs(pq.coords[j] - q.coords[perm[j]]));
    c.error("permutation_equivariant", perr, 1e-12);

    const double center = 1.0 / static_cast<double>(p.coords.size());
    double s = (q.t - 2.0) / (p.t - 2.0);
    double colin = 0.0;
    for (std::size_t j = 0; j < p.coords.size(); ++j) {
      colin = std::max(colin, std::fabs((q.coords[j] - center) - s * (p.coords[j] - center)));
    }
    c.error("colinear_with_apex", colin, 1e-9);

    // Induced retraction on arc masses.
    double r = uniform(rng, 2.0 * kPi / 3.0, kPi);
    int k = uniform_int(rng, 1, std::min(max_k(r), kMaxGeneratedK));
    Measure mu = random_stratum_measure(rng, r, k);
    if (classify(mu, r) != k) continue;
    double t = uniform(rng, 0.0, 1.0);
    ArcMassForm form = arc_mass_form(mu, k, r);
    RhoResult rho = rho_retraction(form, t);
    double wmin = *std::min_element(rho.weights.begin(), rho.weights.end());
    c.boolean("rho_target_membership", rho.t == 0.0 || wmin == 0.0);
    ArcMassForm rotated = form;
    std::rotate(rotated.components.begin(), rotated.components.begin() + 1, rotated.components.end());
    RhoResult rr = rho_retraction(rotated, t);
    c.error("rho_cyclic_relabeling", wasserstein_circle(rr.measure, rho.measure) + std::fabs(rr.t - rho.t), 1e-12);
    RhoResult fixed = rho_retraction(form, 0.0);
    c.error("rho_fixes_t0", wasserstein_circle(fixed.measure, mu) + fixed.t, 1e-12);

    // Boundary measure: drop one arc, the closure form has a zero weight and rho is the identity.
    if (form.components.size() >= 3) {
      std::vector<Atom> kept;
      for (std::size_t a = 1; a < form.components.size(); ++a) {
        for (const Atom& x : form.components[a].part.atoms()) kept.push_back({x.position, x.mass * form.components[a].weight});
      }
      Measure boundary = Measure::from_atoms(kept, true);
      if (in_closure_V(boundary, k, r)) {
        RhoResult b = rho_retraction(boundary, t, k, r);
        c.error("rho_fixes_boundary", wasserstein_circle(b.measure, boundary) + std::fabs(b.t - t), 1e-12);
      }
    }
  }
  return c.results();
}

std::vector<CheckResult> quotient_suite(const SuiteOptions& opts) {
  Checks c("quotient", opts);
  const std::uint64_t seed = suite_seed(opts.seed, 6);
  for (long i = 0; i < opts.iters; ++i) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(i));
    double r = random_scale(rng);
    Measure mu = random_thickening_measure(rng, r);
    Measure end = canonical_collapse(mu, r);
    c.boolean("representative_equivalent", equivalent(mu, end, r));
    RegularPolygonalMeasure poly = to_polygonal(mu, r);
    c.boolean("polygonal_round_trip", same_atoms(poly.to_measure(), end, tol_ang(), kTolMass));
    c.boolean("reflexive", equivalent(mu, mu, r));

    Measure a = collapse_measure(mu, uniform(rng, 0.0, 1.0), r);
    Measure b = collapse_measure(mu, uniform(rng, 0.0, 1.0), r);
    bool ab = equivalent(a, b, r), bc = equivalent(b, mu, r), ac = equivalent(a, mu, r);
    c.boolean("homotopy_class_equivalent", ab && bc && ac);
    Measure other = random_thickening_measure(rng, r);
    c.boolean("symmetric", equivalent(mu, other, r) == equivalent(other, mu, r));
    c.boolean("transitive", !(ab && bc) || ac);

    CellId cell = cell_of(mu, r);
    int k = classify(mu, r);
    c.boolean("partition", !cell.contractible && (cell.dim == 2 * k || cell.dim == 2 * k + 1) &&
                                cell.dim <= 2 * max_k(r) + 1);
  }

  long degree_iters = std::max<long>(1, opts.iters / 2000);
  const std::uint64_t dseed = suite_seed(opts.seed, 7);
  for (long i = 0; i < degree_iters; ++i) {
    for (int k = 1; k <= 3; ++k) {
      Rng rng = trial_rng(dseed, static_cast<std::uint64_t>(i * 4 + k));
      std::vector<double> masses = random_weights(rng, 2 * k - 1);
      AttachingReport rep = attaching_degree(k, masses, 32, 12);
      c.boolean("attaching_degree_unit", std::abs(rep.degree) == 1);
      c.boolean("gamma_closed_on_boundary", rep.closed && rep.on_boundary && rep.stratum);
      c.boolean("phase_monotone", rep.monotone);
      c.boolean("targets_hit_once", rep.symmetric || (rep.min_hits == 1 && rep.max_hits == 1));
      c.boolean("surjective_sample", rep.surjective);
    }
  }
  return c.results();
}

std::vector<CheckResult> persistence_suite(const SuiteOptions& opts) {
  Checks c("persistence", opts);
  const std::uint64_t seed = suite_seed(opts.seed, 8);
  long iters = std::max<long>(1, opts.iters / 20);
  for (long i = 0; i < iters; ++i) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(i));
    int n = uniform_int(rng, 3, 10);
    int max_dim = uniform_int(rng, 0, 2);
    DistanceMatrix d;
    if (coin(rng, 0.5)) {
      d = sample_circle(n);
    } else {
      std::vector<Angle> pts;
      for (int j = 0; j < n; ++j) pts.push_back(Angle(uniform(rng, 0.0, kTwoPi)));
      d = DistanceMatrix(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) d(a, b) = geodesic_distance(pts[a], pts[b]);
      }
    }
    FiltrationComplex fc = vr_filtration(d, max_dim);
    std::vector<Bar> bars = persistent_homology(fc);
    std::vector<Bar> all = persistent_homology(fc, true);

    long defect = 0;
    double vmax = fc.simplices.back().value;
    for (int s = 0; s < 10; ++s) {
      double v = vmax * s / 9.0;
      defect = std::max(defect, std::labs(euler_defect(fc, all, v)));
    }
    c.boolean("euler_characteristic", defect == 0);

    int born_at_zero = 0, infinite0 = 0;
    for (const Bar& b : bars) {
      if (b.dim == 0 && b.birth == 0.0) ++born_at_zero;
      if (b.dim == 0 && b.infinite()) ++infinite0;
    }
    // Zero-length pairs can only occur for coincident points, which the generator avoids almost surely.
    c.boolean("dim0_count_at_zero", born_at_zero == n);
    c.boolean("one_infinite_component", infinite0 == 1);

    FiltrationComplex shuffled = fc;
    auto& s = shuffled.simplices;
    for (std::size_t lo = 0; lo < s.size();) {
      std::size_t hi = lo;
      while (hi < s.size() && s[hi].value == s[lo].value && s[hi].dim() == s[lo].dim()) ++hi;
      std::shuffle(s.begin() + static_cast<long>(lo), s.begin() + static_cast<long>(hi), rng);
      lo = hi;
    }
    std::vector<Bar> again = persistent_homology(shuffled);
    bool same = again.size() == bars.size();
    for (std::size_t j = 0; same && j < bars.size(); ++j) {
      same = again[j].dim == bars[j].dim && again[j].birth == bars[j].birth && again[j].death == bars[j].death;
    }
    c.boolean("pairing_independent_of_ties", same);
  }

  for (int n : {12, 18, 24}) {
    std::vector<Bar> bars = persistent_homology(vr_filtration(sample_circle(n), 1));
    double err = INFINITY;
    for (const Bar& b : bars) {
      if (b.dim == 1) err = std::min(err, std::max(std::fabs(b.birth), std::fabs(b.death - 2.0 * kPi / 3.0)));
    }
    c.error("dim1_convergence_n" + std::to_string(n), err, kTwoPi / n + 1e-9);
  }
  return c.results();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arcs", "collapse", "transport", "retraction", "quotient", "persistence"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const std::string& n : suite_names()) {
      std::vector<CheckResult> part = run_suite(n, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "transport") return transport_suite(opts);
  if (name == "arcs") return arcs_suite(opts);
  if (name == "collapse") return collapse_suite(opts);
  if (name == "retraction") return retraction_suite(opts);
  if (name == "quotient") return quotient_suite(opts);
  if (name == "persistence") return persistence_suite(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

std::string summary_table(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "suite        check                                  trials  failures  max_error               tolerance\n";
  auto pad = [](const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); };
  for (const CheckResult& r : results) {
    os << pad(r.suite, 13) << pad(r.name, 39) << pad(std::to_string(r.trials), 8) << pad(std::to_string(r.failures), 10)
       << pad(format_real(r.max_error), 24) << format_real(r.tolerance) << "\n";
  }
  os << "total failures: " << total_failures(results) << "\n";
  return os.str();
}

long total_failures(const std::vector<CheckResult>& results) {
  long f = 0;
  for (const CheckResult& r : results) f += r.failures;
  return f;
}

}  // namespace vrm::verify
