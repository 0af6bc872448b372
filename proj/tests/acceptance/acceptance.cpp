// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   jordankit_acceptance <path-to-jordankit-cli> [dump-dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jordan/connectivity.hpp"
#include "jordan/curve.hpp"
#include "jordan/error.hpp"
#include "jordan/fuzz.hpp"
#include "jordan/io.hpp"
#include "jordan/oracle.hpp"
#include "jordan/regions.hpp"
#include "jordan/simplifier.hpp"
#include "jordan/spatial.hpp"
#include "jordan/topology.hpp"

namespace fs = std::filesystem;
using namespace jordan;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kCurves = 500;
constexpr std::size_t kLooped = 100;
constexpr std::size_t kN = 2048;
constexpr std::size_t kM = 16;
const Tolerance kTau{};

fs::path g_dump_dir = "acceptance_dumps";

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(what));
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string fmt(Point p) { return "(" + fmt(p.x) + ", " + fmt(p.y) + ")"; }

void dump_geometry(const std::string& name, const ClosedCurve& curve, const ParamPolygon& poly, const std::string& why) {
  fs::create_directories(g_dump_dir);
  io::json j = {{"reason", why}, {"curve", io::to_json(curve)}, {"polygon", io::to_json(poly)}};
  io::write_text(g_dump_dir / (name + ".json"), io::dump(j));
}

std::vector<std::pair<Point, Point>> sides_of(const ParamPolygon& poly) {
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t i = 0; i < poly.size(); ++i) out.emplace_back(poly.vertex(i), poly.vertex(poly.next(i)));
  return out;
}

// Reference point-to-polygon distance: every side, no index.
double brute_distance(const ParamPolygon& poly, Point p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly.vertex(i);
    const Point d = poly.vertex(poly.next(i)) - a;
    const double s = std::clamp(dot(p - a, d) / dot(d, d), 0.0, 1.0);
    best = std::min(best, norm(p - (a + d * s)));
  }
  return best;
}

// Simple fuzz curves shared by C1, C3 and C4.
struct FuzzPolygon {
  std::size_t index;
  fuzz::GeneratedCurve gen;
  ParamPolygon input;
  std::optional<SimplifyResult> result;
  std::string error;
};

std::vector<FuzzPolygon>& fuzz_set() {
  static std::vector<FuzzPolygon> set;
  return set;
}

// C1: every step keeps mesh, spacing and subset; the result is oracle-simple.
void check_reduction(const ParamPolygon& input, const ClosedCurve& curve, const std::string& name,
                     std::optional<SimplifyResult>& result, std::string& error, Outcome& out, std::size_t& steps) {
  std::vector<std::string> step_errors;
  SimplifyOptions so;
  so.on_step = [&](const ReductionStep& s, const ParamPolygon& after) {
    if (mesh(after) > s.mesh_before) step_errors.push_back("mesh grew at a step");
    if (!satisfies_spacing(after, SpacingRule::AllowHalf)) step_errors.push_back("spacing violated at a step");
  };
  try {
    result = simplify(input, kTau, so);
  } catch (const std::exception& e) {
    error = e.what();
    out.fail(name + ": simplify threw: " + error);
    dump_geometry(name, curve, input, error);
    return;
  }
  steps += result->steps.size();
  for (const auto& e : step_errors) out.fail(name + ": " + e);
  const ParamPolygon& pg = result->polygon.polygon();
  for (std::size_t k = 0; k < pg.size(); ++k) {
    const auto& params = input.params();
    const auto it = std::lower_bound(params.begin(), params.end(), pg.param(k));
    if (it == params.end() || *it != pg.param(k) ||
        input.vertex(static_cast<std::size_t>(it - params.begin())) != pg.vertex(k)) {
      out.fail(name + ": output vertex " + std::to_string(k) + " is not an input vertex");
      break;
    }
  }
  if (!oracle::naive_self_intersections(pg, kTau).empty()) {
    out.fail(name + ": oracle finds illegal intersections in the output");
    dump_geometry(name, curve, pg, "not simple");
  }
  if (!is_simple(pg, kTau)) out.fail(name + ": is_simple is false");
}

Outcome c1_simplification() {
  Outcome out;
  std::size_t steps = 0;
  auto& set = fuzz_set();
  set.clear();
  for (std::size_t i = 0; i < kCurves; ++i) {
    fuzz::GeneratedCurve gen = fuzz::generate_curve(kSeed, i);
    const ClosedCurve curve(gen.curve);
    FuzzPolygon fp{i, std::move(gen), sample(curve, kN), std::nullopt, {}};
    check_reduction(fp.input, curve, "simple_" + std::to_string(i), fp.result, fp.error, out, steps);
    set.push_back(std::move(fp));
  }
  std::size_t looped_steps = 0;
  for (std::size_t i = 0; i < kLooped; ++i) {
    const auto gen = fuzz::generate_curve(kSeed, i, fuzz::CurveKind::Looped);
    const ClosedCurve curve(gen.curve);
    std::optional<SimplifyResult> result;
    std::string error;
    check_reduction(sample(curve, kN), curve, "looped_" + std::to_string(i), result, error, out, looped_steps);
  }
  out.detail = std::to_string(kCurves) + " simple + " + std::to_string(kLooped) + " looped curves at n=" +
               std::to_string(kN) + ", " + std::to_string(steps + looped_steps) + " reduction steps";
  return out;
}

Outcome c2_classification() {
  Outcome out;
  const ClosedCurve circle = ClosedCurve::unit_circle();
  const SimplePolygon poly = SimplePolygon::certify(sample(circle, 4096), kTau, ScanMethod::Sweep);
  const double eps = band_radius(circle, poly.polygon(), 16);
  std::mt19937_64 rng = fuzz::case_rng(kSeed, 2);
  std::size_t checked = 0;
  for (int k = 0; k < 10000; ++k) {
    const Point p{fuzz::uniform(rng, -2.0, 2.0), fuzz::uniform(rng, -2.0, 2.0)};
    const double r = norm(p);
    if (!(std::abs(r - 1.0) > 2.0 * eps)) continue;
    ++checked;
    const RegionLabel want = r < 1.0 ? RegionLabel::Interior : RegionLabel::Exterior;
    const RegionLabel got = classify(poly, eps, p, kTau);
    if (got != want) out.fail(fmt(p) + " classified " + to_string(got));
  }
  out.detail = std::to_string(checked) + " of 10000 points beyond margin 2eps, eps=" + fmt(eps);
  return out;
}

Outcome c3_band() {
  Outcome out;
  std::size_t samples = 0;
  for (const auto& fp : fuzz_set()) {
    if (!fp.result) {
      out.fail("curve " + std::to_string(fp.index) + " has no simplified polygon");
      continue;
    }
    const ClosedCurve curve(fp.gen.curve);
    const ParamPolygon& pg = fp.result->polygon.polygon();
    const double eps = band_radius(curve, pg, kM);
    const SegmentGrid grid(sides_of(pg));
    const std::size_t fine = 64 * kN;
    for (std::size_t k = 0; k < fine; ++k) {
      const Point p = curve(static_cast<double>(k) / static_cast<double>(fine));
      const double d = grid.nearest(p)->distance;
      // The index is exact; spot-check it against the full side loop.
      if (k % 4099 == 0 && std::abs(d - brute_distance(pg, p)) > 1e-12) {
        out.fail("curve " + std::to_string(fp.index) + ": grid distance disagrees with brute force");
      }
      if (d > eps) {
        out.fail("curve " + std::to_string(fp.index) + ": sample " + std::to_string(k) + " at " + fmt(d) + " > eps " + fmt(eps));
        dump_geometry("band_" + std::to_string(fp.index), curve, pg, "sample outside band");
        break;
      }
    }
    samples += fine;
  }
  out.detail = std::to_string(samples) + " fine samples over " + std::to_string(fuzz_set().size()) + " curves";
  return out;
}

Outcome c4_witness() {
  Outcome out;
  std::size_t applicable = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (const auto& fp : fuzz_set()) {
    if (!fp.result) continue;
    const ClosedCurve curve(fp.gen.curve);
    const SimplePolygon& poly = fp.result->polygon;
    const double eps = band_radius(curve, poly.polygon(), kM);
    if (!(eps < fp.gen.gap / 2.0)) continue;
    ++applicable;
    const std::string name = "witness_" + std::to_string(fp.index);
    try {
      const WitnessReport w = interior_witness(poly, kTau);
      const bool inside = oracle::winding_number(poly.polygon(), w.e, kTau) != 0 &&
                          contains(poly, w.e, kTau) == Location::Inside;
      const double clearance = brute_distance(poly.polygon(), w.e);
      min_ratio = std::min(min_ratio, clearance / eps);
      if (!inside) {
        out.fail(name + ": E = " + fmt(w.e) + " is not inside");
        dump_geometry(name, curve, poly.polygon(), "witness outside");
      } else if (!(w.clearance > eps) || !(clearance > eps)) {
        out.fail(name + ": clearance " + fmt(clearance) + " <= eps " + fmt(eps));
        dump_geometry(name, curve, poly.polygon(), "witness clearance");
      }
    } catch (const std::exception& e) {
      out.fail(name + ": " + e.what());
      dump_geometry(name, curve, poly.polygon(), e.what());
    }
  }
  out.detail = std::to_string(applicable) + " curves with eps < gap/2, min clearance/eps " + fmt(min_ratio);
  if (applicable == 0) out.fail("no applicable curves");
  return out;
}

// C5 arcs: random 5-segment polylines from an Interior to an Exterior point.
struct Member {
  SimplePolygon poly;
  double eps;  // band_radius of the raw sampling
};

struct Family {
  std::string name;
  std::vector<Member> members;
};

std::vector<Family> separation_families() {
  std::vector<Family> fams;
  auto add = [](Family& f, ClosedCurve c, std::size_t n) {
    const ParamPolygon raw = sample(c, n);
    f.members.push_back({simplify(raw, kTau, {ScanMethod::Sweep, {}}).polygon, band_radius(c, raw, kM)});
  };
  Family circle{"circle", {}};
  add(circle, ClosedCurve::unit_circle(), 1024);
  Family ellipse{"ellipse", {}};
  add(ellipse, ClosedCurve(EllipseCurve(2.0, 1.0, {0.3, -0.2}, 0.4)), 1024);
  Family square{"square", {}};
  add(square, ClosedCurve(PolylineCurve({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}})), 1024);
  Family simple{"fourier", {}};
  for (std::size_t i = 0; i < 10; ++i) add(simple, ClosedCurve(fuzz::generate_curve(kSeed + 5, i).curve), 1024);
  Family looped{"looped", {}};
  for (std::size_t i = 0; i < 10; ++i) {
    add(looped, ClosedCurve(fuzz::generate_curve(kSeed + 5, i, fuzz::CurveKind::Looped).curve), 1024);
  }
  fams.push_back(std::move(circle));
  fams.push_back(std::move(ellipse));
  fams.push_back(std::move(square));
  fams.push_back(std::move(simple));
  fams.push_back(std::move(looped));
  return fams;
}

Outcome c5_separation() {
  Outcome out;
  std::size_t total = 0;
  std::string per_family;
  for (const Family& fam : separation_families()) {
    std::mt19937_64 rng = fuzz::case_rng(kSeed + 7, std::hash<std::string>{}(fam.name) & 0xffff);
    std::size_t done = 0;
    for (std::size_t k = 0; k < 1000; ++k) {
      const auto& [poly, eps] = fam.members[k % fam.members.size()];
      const ParamPolygon& pg = poly.polygon();
      const auto a = fuzz::sample_interior(poly, eps, rng);
      const auto b = fuzz::sample_exterior(poly, eps, rng);
      if (!a || !b) {
        out.fail(fam.name + ": could not sample a point pair");
        continue;
      }
      Point lo = pg.vertex(0), hi = lo;
      for (const Point& v : pg.vertices()) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
      }
      PathPolyline arc;
      arc.points.push_back(*a);
      for (int s = 0; s < 4; ++s) {
        arc.points.push_back({fuzz::uniform(rng, 2 * lo.x - hi.x, 2 * hi.x - lo.x), fuzz::uniform(rng, 2 * lo.y - hi.y, 2 * hi.y - lo.y)});
      }
      arc.points.push_back(*b);
      ++done;
      const auto hit = check_separation(poly, eps, arc, kTau);
      if (!hit) {
        out.fail(fam.name + ": arc from " + fmt(*a) + " to " + fmt(*b) + " reported no boundary point");
        continue;
      }
      if (brute_distance(pg, *hit) > 1e-7) out.fail(fam.name + ": point " + fmt(*hit) + " is off the polygon");
      double on_arc = std::numeric_limits<double>::infinity();
      for (std::size_t s = 0; s + 1 < arc.points.size(); ++s) on_arc = std::min(on_arc, point_segment_distance(*hit, arc.points[s], arc.points[s + 1]));
      if (on_arc > 1e-7) out.fail(fam.name + ": point " + fmt(*hit) + " is off the arc");
    }
    total += done;
    per_family += (per_family.empty() ? "" : ", ") + fam.name + " " + std::to_string(done);
  }
  out.detail = std::to_string(total) + " arcs (" + per_family + ")";
  return out;
}

constexpr std::size_t kSubdivisionCurves = 50;
constexpr std::size_t kSubdivisionPairs = 5;
constexpr std::size_t kSubdivisionN = 1024;

Outcome c6_subdivision() {
  Outcome out;
  std::size_t pairs = 0, regular_pairs = 0, reachable = 0, crossing_vertices = 0, special_vertices = 0;
  double min_clearance_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kSubdivisionCurves; ++i) {
    const auto gen = fuzz::generate_curve(kSeed + 11, i);
    const ClosedCurve curve(gen.curve);
    const std::string name = "subdivision_" + std::to_string(i);
    try {
      const SimplePolygon poly = simplify(sample(curve, kSubdivisionN), kTau, {ScanMethod::Sweep, {}}).polygon;
      const ParamPolygon& pg = poly.polygon();
      const double eps = band_radius(curve, pg, kM);
      const bool regular = eps < gen.gap / 2.0;
      const InteriorSubdivision sub(poly, eps, kTau);
      const SegmentGrid sides(sides_of(pg));
      const oracle::GridSpec grid = oracle::make_grid(pg, eps / 4.0);
      std::vector<Point> fine(64 * kSubdivisionN);
      for (std::size_t k = 0; k < fine.size(); ++k) fine[k] = curve(static_cast<double>(k) / static_cast<double>(fine.size()));
      std::mt19937_64 rng = fuzz::case_rng(kSeed + 13, i);
      for (std::size_t k = 0; k < kSubdivisionPairs; ++k) {
        const auto a = fuzz::sample_interior(poly, 3.0 * eps, rng);
        const auto b = fuzz::sample_interior(poly, 3.0 * eps, rng);
        if (!a || !b) {
          out.fail(name + ": could not sample interior points");
          continue;
        }
        ++pairs;
        regular_pairs += regular;
        const std::string tag = name + "/" + std::to_string(k);
        const SeparatingPolygon sep = sub.separating_polygon(*a);
        const ParamPolygon& sp = sep.polygon.polygon();
        special_vertices += sep.special_count();
        crossing_vertices += sep.origins.size() - sep.special_count();
        if (!oracle::naive_self_intersections(sp, kTau).empty()) out.fail(tag + ": separating polygon is not simple");
        for (const Point& v : sp.vertices()) {
          if (oracle::winding_number(pg, v, kTau) == 0) {
            out.fail(tag + ": separating polygon vertex " + fmt(v) + " is outside");
            break;
          }
        }
        const PolygonLocator sep_locator(sp.vertices());
        for (const Point& p : fine) {
          if (sep_locator.inside(p) && contains(sep.polygon, p, kTau) == Location::Inside) {
            out.fail(tag + ": curve sample " + fmt(p) + " inside the separating polygon");
            dump_geometry(tag, curve, pg, "curve inside separating polygon");
            break;
          }
        }
        if (oracle::winding_number(sp, *a, kTau) == 0) out.fail(tag + ": A outside its separating polygon");
        if (regular && contains(sep.polygon, *b, kTau) != Location::Inside) {
          out.fail(tag + ": B = " + fmt(*b) + " outside the separating polygon");
          dump_geometry(tag, curve, pg, "B outside separating polygon");
        }
        bool routed = false;
        try {
          const PathPolyline path = sub.connect(*a, *b);
          routed = true;
          if (path.points.front() != *a || path.points.back() != *b) out.fail(tag + ": path endpoints differ from A, B");
          double clearance = std::numeric_limits<double>::infinity();
          for (std::size_t s = 0; s + 1 < path.points.size(); ++s) {
            clearance = std::min(clearance, sides.segment_distance(path.points[s], path.points[s + 1]));
          }
          for (const Point& p : path.points) {
            if (oracle::winding_number(pg, p, kTau) == 0) {
              out.fail(tag + ": path point " + fmt(p) + " outside the polygon");
              break;
            }
          }
          min_clearance_ratio = std::min(min_clearance_ratio, clearance / eps);
          if (!(clearance > eps / 2.0)) out.fail(tag + ": path clearance " + fmt(clearance) + " <= eps/2");
        } catch (const NotSameFace&) {
        }
        const bool grid_ok = oracle::grid_path(poly, eps, *a, *b, grid).has_value();
        reachable += grid_ok;
        if (routed != grid_ok) {
          out.fail(tag + std::string(": connect ") + (routed ? "routed" : "did not route") + ", grid oracle " + (grid_ok ? "reaches" : "does not reach"));
          dump_geometry(tag, curve, pg, "reachability disagreement");
        }
      }
    } catch (const std::exception& e) {
      out.fail(name + ": " + e.what());
      dump_geometry(name, curve, sample(curve, kSubdivisionN), e.what());
    }
  }
  out.detail = std::to_string(pairs) + " pairs (" + std::to_string(regular_pairs) + " with eps < gap/2), " +
               std::to_string(reachable) + " grid-reachable, min clearance/eps " + fmt(min_clearance_ratio) +
               ", separating vertices: " + std::to_string(special_vertices) + " special, " +
               std::to_string(crossing_vertices) + " on connectors";
  return out;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome c7_determinism(const std::string& cli) {
  Outcome out;
  fs::create_directories(g_dump_dir);
  const fs::path r1 = g_dump_dir / "fuzz_run1.json";
  const fs::path r2 = g_dump_dir / "fuzz_run2.json";
  // Different worker counts on purpose: the report must not depend on them.
  const std::string base = "\"" + cli + "\" fuzz --seed 42 --cases 100";
  const int e1 = std::system((base + " --threads 1 --out \"" + r1.string() + "\"").c_str());
  const int e2 = std::system((base + " --threads 3 --out \"" + r2.string() + "\"").c_str());
  if (e1 != 0 || e2 != 0) out.fail("fuzz exit status " + std::to_string(e1) + " / " + std::to_string(e2));
  const std::string a = read_file(r1), b = read_file(r2);
  if (a.empty()) out.fail("empty report");
  if (a != b) out.fail("reports differ");
  std::size_t findings = 0;
  try {
    findings = io::parse_json(a).at("findings").get<std::size_t>();
  } catch (const std::exception& e) {
    out.fail(std::string("unreadable report: ") + e.what());
  }
  out.detail = "two runs, " + std::to_string(a.size()) + " bytes each, " + std::to_string(findings) + " findings";
  return out;
}

Outcome c8_scaling() {
  Outcome out;
  using clock = std::chrono::steady_clock;
  // Large inputs: a looped fuzz curve and a seven-petal epicycloid-like curve.
  std::vector<std::pair<std::string, ClosedCurve>> big;
  big.emplace_back("looped fuzz", ClosedCurve(fuzz::generate_curve(kSeed, 3, fuzz::CurveKind::Looped).curve));
  big.emplace_back("epicycle", ClosedCurve(FourierCurve({0.0, {1.0, 0, 0, 0, 0, 0, 0.6}, {0.0, 0, 0, 0, 0, 0, 0}},
                                                        {0.0, {0.0, 0, 0, 0, 0, 0, 0}, {1.0, 0, 0, 0, 0, 0, -0.6}})));
  std::string detail;
  for (const auto& [name, curve] : big) {
    const ParamPolygon input = sample(curve, 100000);
    if (is_simple(input, kTau, ScanMethod::Sweep)) out.fail(name + ": input is already simple");
    const auto t0 = clock::now();
    try {
      const SimplifyResult r = simplify(input, kTau, {ScanMethod::Sweep, {}});
      const double secs = std::chrono::duration<double>(clock::now() - t0).count();
      if (!is_simple(r.polygon.polygon(), kTau, ScanMethod::Sweep)) out.fail(name + ": output not simple");
      detail += name + " n=100000: " + std::to_string(r.steps.size()) + " steps, " + std::to_string(r.polygon.size()) +
                " vertices left, " + fmt(secs) + " s; ";
    } catch (const std::exception& e) {
      out.fail(name + ": " + e.what());
    }
  }
  // Naive and sweep scans must agree step for step.
  std::size_t instances = 0;
  for (std::size_t n : {256u, 1024u, 4096u}) {
    for (std::size_t i = 0; i < 4; ++i) {
      const ClosedCurve curve(fuzz::generate_curve(kSeed + 17, i, fuzz::CurveKind::Looped).curve);
      const ParamPolygon input = sample(curve, n);
      ++instances;
      try {
        const SimplifyResult a = simplify(input, kTau, {ScanMethod::Naive, {}});
        const SimplifyResult b = simplify(input, kTau, {ScanMethod::Sweep, {}});
        bool same = a.polygon.vertices() == b.polygon.vertices() &&
                    a.polygon.polygon().params() == b.polygon.polygon().params() && a.steps.size() == b.steps.size();
        for (std::size_t s = 0; same && s < a.steps.size(); ++s) {
          same = a.steps[s].kind == b.steps[s].kind && a.steps[s].i == b.steps[s].i && a.steps[s].j == b.steps[s].j;
        }
        if (!same) out.fail("naive and sweep differ at n=" + std::to_string(n) + ", curve " + std::to_string(i));
      } catch (const std::exception& e) {
        out.fail("cross-check n=" + std::to_string(n) + ": " + e.what());
      }
    }
  }
  out.detail = detail + std::to_string(instances) + " naive/sweep cross-checks";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: jordankit_acceptance <jordankit-cli> [dump-dir]\n";
    return 2;
  }
  const std::string cli = argv[1];
  if (argc > 2) g_dump_dir = argv[2];

  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"C1", "simplification conformance", c1_simplification},
      {"C2", "region classification vs analytic circle", c2_classification},
      {"C3", "fine samples within band radius", c3_band},
      {"C4", "interior witness", c4_witness},
      {"C5", "separation by random polylines", c5_separation},
      {"C6", "separating polygon and interior paths", c6_subdivision},
      {"C7", "fuzz determinism", [&] { return c7_determinism(cli); }},
      {"C8", "scaling and sweep/naive agreement", c8_scaling},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s: %s [%s; %.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
