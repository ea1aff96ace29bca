#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "svg.hpp"
#include "vrm/verify/suites.hpp"
#include "vrm/vrm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

struct Globals {
  bool degrees = false;
  bool normalize = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vrm::ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw vrm::ValidationError("cannot write " + path);
  out << text;
}

double scale_arg(double r, const Globals& g) { return g.degrees ? r * vrm::kPi / 180.0 : r; }

int cmd_wasserstein(const Globals& g, const std::string& a_path, const std::string& b_path, const std::string& method) {
  vrm::Measure a = vrm::parse_measure(read_file(a_path), g.degrees, g.normalize);
  vrm::Measure b = vrm::parse_measure(read_file(b_path), g.degrees, g.normalize);
  std::cout.precision(17);
  if (method == "circle") {
    std::cout << vrm::format_real(vrm::wasserstein_circle(a, b)) << "\n";
  } else if (method == "lp") {
    std::cout << vrm::format_real(vrm::wasserstein_lp(a, b).distance) << "\n";
  } else {
    double lp = vrm::wasserstein_lp(a, b).distance;
    double circle = vrm::wasserstein_circle(a, b);
    std::cout << "lp     " << vrm::format_real(lp) << "\n"
              << "circle " << vrm::format_real(circle) << "\n"
              << "delta  " << vrm::format_real(std::fabs(lp - circle)) << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Globals& g, const std::string& path, double r) {
  vrm::Measure mu = vrm::parse_measure(read_file(path), g.degrees, g.normalize);
  vrm::json out;
  if (std::isfinite(r) && r >= vrm::kPi) {
    out = {{"regime", "contractible"}, {"r", r}, {"cell_dim", nullptr}};
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  vrm::ArcDecomposition dec = vrm::arc_decomposition(mu, r);
  vrm::json closure = vrm::json::array();
  for (int k = 0; k <= vrm::max_k(r); ++k) {
    if (vrm::in_closure_V(mu, k, r)) closure.push_back(k);
  }
  out = {{"k", dec.k()},
         {"arcs", dec.count()},
         {"cell_dim", vrm::cell_of(mu, r).dim},
         {"in_closure", closure},
         {"max_k", vrm::max_k(r)},
         {"max_arcs_extension", vrm::max_arcs_extension(mu, r)},
         {"polygonal", vrm::to_json(vrm::to_polygonal(mu, r))},
         {"decomposition", vrm::to_json(dec)}};
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_collapse(const Globals& g, const std::string& path, double r, int steps, const std::string& format,
                 const std::string& output, const std::string& svg_path, int svg_frames) {
  vrm::Measure mu = vrm::parse_measure(read_file(path), g.degrees, g.normalize);
  std::vector<vrm::Measure> frames = vrm::trajectory(mu, r, steps);
  if (format == "json") {
    write_output(output, vrm::trajectory_json(frames).dump(2) + "\n");
  } else {
    write_output(output, vrm::trajectory_csv(frames));
  }
  if (!svg_path.empty()) {
    int shown = std::clamp(svg_frames, 1, steps);
    std::vector<vrm::Measure> picked;
    std::vector<double> times;
    for (int i = 0; i < shown; ++i) {
      int idx = shown == 1 ? steps - 1 : static_cast<int>(std::lround(static_cast<double>(i) * (steps - 1) / (shown - 1)));
      picked.push_back(frames[static_cast<std::size_t>(idx)]);
      times.push_back(static_cast<double>(idx) / (steps - 1));
    }
    write_output(svg_path, vrm::cli::collapse_svg(picked, times, r));
  }
  return kExitOk;
}

int cmd_barcode(int n, int max_dim, bool compare, const std::string& format, double tol) {
  vrm::FiltrationComplex fc = vrm::vr_filtration(vrm::sample_circle(n), max_dim);
  std::vector<vrm::Bar> bars = vrm::persistent_homology(fc);
  double t = tol > 0.0 ? tol : vrm::kTwoPi / n;
  if (format == "json") {
    vrm::json out = {{"n", n}, {"max_dim", max_dim}, {"simplices", fc.simplices.size()}, {"bars", vrm::to_json(bars)}};
    if (compare) {
      std::vector<vrm::Bar> theory = vrm::theoretical_barcode(max_dim);
      out["theoretical"] = vrm::to_json(theory);
      out["comparison"] = vrm::to_json(vrm::compare_barcodes(bars, theory, t));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n = " << n << ", max_dim = " << max_dim << ", simplices = " << fc.simplices.size() << "\n";
    for (const vrm::Bar& b : bars) {
      std::cout << "dim " << b.dim << "  [" << vrm::format_real(b.birth) << ", "
                << (b.infinite() ? std::string("inf") : vrm::format_real(b.death)) << ")\n";
    }
    if (compare) {
      std::vector<vrm::Bar> theory = vrm::theoretical_barcode(max_dim);
      std::cout << "\n" << vrm::comparison_table(vrm::compare_barcodes(bars, theory, t));
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, long iters, std::optional<double> tol) {
  vrm::verify::SuiteOptions opts{seed, iters, tol};
  std::vector<vrm::verify::CheckResult> results = vrm::verify::run_suite(suite, opts);
  std::cout << vrm::verify::summary_table(results);
  return vrm::verify::total_failures(results) == 0 ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vietoris-Rips metric thickenings of the circle"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--degrees", g.degrees, "Read measure angles (and --r) in degrees");
  app.add_flag("--normalize", g.normalize, "Rescale input masses to sum to 1");

  std::string file_a, file_b, method = "circle";
  auto* w = app.add_subcommand("wasserstein", "1-Wasserstein distance between two measures");
  w->add_option("file_a", file_a, "First measure JSON")->required();
  w->add_option("file_b", file_b, "Second measure JSON")->required();
  w->add_option("--method", method, "lp, circle or both")->check(CLI::IsMember({"lp", "circle", "both"}));

  std::string file;
  double r = 0.0;
  auto* c = app.add_subcommand("classify", "Stratum, arcs and CW cell of a measure");
  c->add_option("file", file, "Measure JSON")->required();
  c->add_option("--r", r, "Scale")->required();

  int steps = 16, svg_frames = 3;
  std::string out_format = "csv", output, svg_path;
  auto* col = app.add_subcommand("collapse", "Trajectory of the collapse homotopy");
  col->add_option("file", file, "Measure JSON")->required();
  col->add_option("--r", r, "Scale")->required();
  col->add_option("--steps", steps, "Number of frames (>= 2)");
  col->add_option("--out", out_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  col->add_option("-o,--output", output, "Write the trajectory here instead of stdout");
  col->add_option("--svg", svg_path, "Write an SVG figure of selected frames");
  col->add_option("--svg-frames", svg_frames, "Frames shown in the SVG");

  int n = 12, max_dim = 2;
  bool compare = false;
  std::string bar_format = "table";
  double bar_tol = 0.0;
  auto* b = app.add_subcommand("barcode", "Vietoris-Rips barcode of n evenly spaced circle points");
  b->add_option("--n", n, "Number of sample points")->required();
  b->add_option("--maxdim", max_dim, "Largest homology dimension");
  b->add_flag("--compare", compare, "Compare against the thickening barcode");
  b->add_option("--out", bar_format, "json or table")->check(CLI::IsMember({"json", "table"}));
  b->add_option("--tol", bar_tol, "Comparison tolerance (default 2 pi / n)");

  std::string suite = "all";
  std::uint64_t seed = 1;
  long iters = 1000;
  std::optional<double> tol;
  auto* v = app.add_subcommand("verify", "Run randomized property suites");
  v->add_option("--suite", suite, "Suite name or all")
      ->check(CLI::IsMember({"all", "arcs", "collapse", "transport", "retraction", "quotient", "persistence"}));
  v->add_option("--seed", seed, "Seed");
  v->add_option("--iters", iters, "Trials per suite")->check(CLI::PositiveNumber);
  v->add_option("--tol", tol, "Override every numeric tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*w) return cmd_wasserstein(g, file_a, file_b, method);
    if (*c) return cmd_classify(g, file, scale_arg(r, g));
    if (*col) return cmd_collapse(g, file, scale_arg(r, g), steps, out_format, output, svg_path, svg_frames);
    if (*b) return cmd_barcode(n, max_dim, compare, bar_format, bar_tol);
    if (*v) return cmd_verify(suite, seed, iters, tol);
  } catch (const vrm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
