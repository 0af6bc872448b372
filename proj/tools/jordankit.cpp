// Command-line front end: sampling, reduction, classification, witness,
// separating polygon, interior paths, fuzzing and SVG rendering.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "jordan/connectivity.hpp"
#include "jordan/curve.hpp"
#include "jordan/error.hpp"
#include "jordan/fuzz.hpp"
#include "jordan/io.hpp"
#include "jordan/regions.hpp"
#include "jordan/simplifier.hpp"
#include "jordan/svg.hpp"

namespace {

using namespace jordan;

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kFindings = 3 };

struct Config {
  std::string curve_path;
  std::string poly_path;
  std::string out_path;
  std::string eps_text = "auto";
  std::string method = "naive";
  std::size_t n = 1024;
  std::size_t fuzz_n = 512;
  std::size_t m = 16;
  double tau = Tolerance::kDefault;
  std::vector<double> point;
  std::vector<double> from;
  std::vector<double> to;
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::size_t threads = 0;
  bool no_subdivision = false;
  std::string dump_path;
  std::string witness_path;
  std::string separating_path;
  std::string path_path;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    std::cout << text;
  } else {
    io::write_text(cfg.out_path, text);
  }
}

Point as_point(const std::vector<double>& v, const char* flag) {
  if (v.size() != 2) throw InvalidArgument(std::string(flag) + " needs two numbers");
  return {v[0], v[1]};
}

ClosedCurve load_curve(const Config& cfg) {
  if (cfg.curve_path.empty()) throw InvalidArgument("--curve is required");
  return io::curve_from_json(io::read_json(cfg.curve_path));
}

ParamPolygon load_polygon(const Config& cfg) {
  if (cfg.poly_path.empty()) throw InvalidArgument("--poly is required");
  return io::polygon_from_json(io::read_json(cfg.poly_path));
}

SimplePolygon load_simple(const Config& cfg) {
  return SimplePolygon::certify(load_polygon(cfg), Tolerance(cfg.tau), ScanMethod::Sweep);
}

// Band radius from --eps, or computed against the curve (the polygon itself,
// read as a curve through its vertices at their params, when no --curve is
// given) and checked against half the injectivity gap.
std::optional<double> literal_eps(const Config& cfg) {
  if (cfg.eps_text == "auto") return std::nullopt;
  std::size_t used = 0;
  double eps = 0.0;
  try {
    eps = std::stod(cfg.eps_text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != cfg.eps_text.size() || !(eps > 0.0)) throw InvalidArgument("--eps must be a positive number or auto");
  return eps;
}

double resolve_eps(const Config& cfg, const ParamPolygon& poly) {
  if (const auto eps = literal_eps(cfg)) return *eps;
  const ClosedCurve curve = cfg.curve_path.empty() ? ClosedCurve(PolylineCurve(poly.vertices(), poly.params()))
                                                     : load_curve(cfg);
  const double eps = band_radius(curve, poly, cfg.m);
  validate_band_radius(eps, injectivity_gap(curve, 0.05, 512));
  return eps;
}

int cmd_sample(const Config& cfg) {
  emit(cfg, io::dump(io::to_json(sample(load_curve(cfg), cfg.n))));
  return kOk;
}

int cmd_simplify(const Config& cfg) {
  const ParamPolygon input = cfg.poly_path.empty() ? sample(load_curve(cfg), cfg.n) : load_polygon(cfg);
  SimplifyOptions opts;
  if (cfg.method == "sweep") {
    opts.method = ScanMethod::Sweep;
  } else if (cfg.method != "naive") {
    throw InvalidArgument("--method must be naive or sweep");
  }
  emit(cfg, io::dump(io::to_json(simplify(input, Tolerance(cfg.tau), opts))));
  return kOk;
}

int cmd_classify(const Config& cfg) {
  const SimplePolygon poly = load_simple(cfg);
  const double eps = resolve_eps(cfg, poly.polygon());
  const Point p = as_point(cfg.point, "--point");
  const RegionLabel label = classify(poly, eps, p, Tolerance(cfg.tau));
  if (cfg.out_path.empty()) {
    std::cout << to_string(label) << "\n";
  } else {
    emit(cfg, io::dump(io::to_json(io::Classification{p, eps, label})));
  }
  return kOk;
}

int cmd_witness(const Config& cfg) {
  emit(cfg, io::dump(io::to_json(interior_witness(load_simple(cfg), Tolerance(cfg.tau)))));
  return kOk;
}

int cmd_separate(const Config& cfg) {
  SimplePolygon poly = load_simple(cfg);
  const double eps = resolve_eps(cfg, poly.polygon());
  const InteriorSubdivision sub(std::move(poly), eps, Tolerance(cfg.tau));
  if (!cfg.dump_path.empty()) io::write_text(cfg.dump_path, io::dump(io::subdivision_to_json(sub)));
  emit(cfg, io::dump(io::to_json(sub.separating_polygon(as_point(cfg.point, "--point")))));
  return kOk;
}

int cmd_path(const Config& cfg) {
  SimplePolygon poly = load_simple(cfg);
  const double eps = resolve_eps(cfg, poly.polygon());
  const InteriorSubdivision sub(std::move(poly), eps, Tolerance(cfg.tau));
  emit(cfg, io::dump(io::to_json(sub.connect(as_point(cfg.from, "--from"), as_point(cfg.to, "--to")))));
  return kOk;
}

int cmd_fuzz(const Config& cfg) {
  fuzz::Options opts;
  opts.seed = cfg.seed;
  opts.cases = cfg.cases;
  opts.n = cfg.fuzz_n;
  opts.m = cfg.m;
  opts.tau = cfg.tau;
  opts.threads = cfg.threads;
  opts.subdivision = !cfg.no_subdivision;
  const fuzz::Report report = fuzz::run(opts);
  emit(cfg, io::dump(io::to_json(report)));
  const std::size_t findings = report.finding_count();
  if (findings > 0) std::cerr << "fuzz: " << findings << " finding(s)\n";
  return findings > 0 ? kFindings : kOk;
}

int cmd_render(const Config& cfg) {
  SvgScene scene;
  if (!cfg.curve_path.empty()) scene.curve = load_curve(cfg);
  if (!cfg.poly_path.empty()) {
    scene.polygon = load_polygon(cfg);
    if (cfg.eps_text != "none") scene.eps = resolve_eps(cfg, *scene.polygon);
  }
  if (!cfg.witness_path.empty()) scene.witness = io::witness_from_json(io::read_json(cfg.witness_path));
  if (!cfg.separating_path.empty()) {
    const io::json j = io::read_json(cfg.separating_path);
    scene.separating = io::polygon_from_json(j.contains("polygon") ? j.at("polygon") : j);
  }
  if (!cfg.path_path.empty()) scene.path = io::path_from_json(io::read_json(cfg.path_path));
  emit(cfg, render_svg(scene));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Polygonal approximation, reduction and separation tools for closed curves"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tau", cfg.tau, "incidence tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out,-o", cfg.out_path, "output file (default stdout)");
  };
  auto eps_flags = [&](CLI::App* sub) {
    sub->add_option("--eps", cfg.eps_text, "band radius, or auto");
    sub->add_option("--m", cfg.m, "sub-samples per parameter interval for auto eps")->check(CLI::PositiveNumber);
    sub->add_option("--curve", cfg.curve_path, "curve JSON used by --eps auto");
  };

  auto* sample_cmd = app.add_subcommand("sample", "sample a curve at t_i = i/n");
  sample_cmd->add_option("--curve", cfg.curve_path, "curve JSON")->required();
  sample_cmd->add_option("--n", cfg.n, "number of samples")->check(CLI::Range(3, 100000000));
  common(sample_cmd);

  auto* simplify_cmd = app.add_subcommand("simplify", "remove illegal intersections");
  simplify_cmd->add_option("--poly", cfg.poly_path, "ParamPolygon JSON");
  simplify_cmd->add_option("--curve", cfg.curve_path, "curve JSON, sampled with --n when --poly is absent");
  simplify_cmd->add_option("--n", cfg.n, "number of samples")->check(CLI::Range(3, 100000000));
  simplify_cmd->add_option("--method", cfg.method, "naive or sweep");
  common(simplify_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "label a point Interior, Exterior or BoundaryBand");
  classify_cmd->add_option("--poly", cfg.poly_path, "simple ParamPolygon JSON")->required();
  classify_cmd->add_option("--point", cfg.point, "x y")->expected(2)->required();
  eps_flags(classify_cmd);
  common(classify_cmd);

  auto* witness_cmd = app.add_subcommand("witness", "construct an interior witness point");
  witness_cmd->add_option("--poly", cfg.poly_path, "simple ParamPolygon JSON")->required();
  common(witness_cmd);

  auto* separate_cmd = app.add_subcommand("separate", "separating polygon around an interior point");
  separate_cmd->add_option("--poly", cfg.poly_path, "simple ParamPolygon JSON")->required();
  separate_cmd->add_option("--point", cfg.point, "x y")->expected(2)->required();
  separate_cmd->add_option("--dump", cfg.dump_path, "write the face subdivision JSON here");
  eps_flags(separate_cmd);
  common(separate_cmd);

  auto* path_cmd = app.add_subcommand("path", "interior path between two points");
  path_cmd->add_option("--poly", cfg.poly_path, "simple ParamPolygon JSON")->required();
  path_cmd->add_option("--from", cfg.from, "x y")->expected(2)->required();
  path_cmd->add_option("--to", cfg.to, "x y")->expected(2)->required();
  eps_flags(path_cmd);
  common(path_cmd);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "seeded property checks over random Fourier curves");
  fuzz_cmd->add_option("--seed", cfg.seed, "generator seed");
  fuzz_cmd->add_option("--cases", cfg.cases, "number of curves");
  fuzz_cmd->add_option("--n", cfg.fuzz_n, "samples per curve")->check(CLI::Range(3, 100000000));
  fuzz_cmd->add_option("--m", cfg.m, "sub-samples per interval")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--threads", cfg.threads, "worker count (default JORDAN_KIT_THREADS or all cores)");
  fuzz_cmd->add_flag("--no-subdivision", cfg.no_subdivision, "skip separating polygon and path checks");
  common(fuzz_cmd);

  auto* render_cmd = app.add_subcommand("render", "SVG figure of curve, polygon, band, witness and paths");
  render_cmd->add_option("--poly", cfg.poly_path, "ParamPolygon JSON");
  render_cmd->add_option("--witness", cfg.witness_path, "witness JSON");
  render_cmd->add_option("--separating", cfg.separating_path, "separating polygon JSON");
  render_cmd->add_option("--path", cfg.path_path, "path JSON");
  eps_flags(render_cmd);
  common(render_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    literal_eps(cfg);  // reject a bad --eps before any input is read
    if (*sample_cmd) return cmd_sample(cfg);
    if (*simplify_cmd) return cmd_simplify(cfg);
    if (*classify_cmd) return cmd_classify(cfg);
    if (*witness_cmd) return cmd_witness(cfg);
    if (*separate_cmd) return cmd_separate(cfg);
    if (*path_cmd) return cmd_path(cfg);
    if (*fuzz_cmd) return cmd_fuzz(cfg);
    if (*render_cmd) return cmd_render(cfg);
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const ConstructionFailed& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kInvalid;
}
