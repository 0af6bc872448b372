#include "jordan/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <thread>

#include "jordan/connectivity.hpp"
#include "jordan/error.hpp"
#include "jordan/oracle.hpp"
#include "jordan/regions.hpp"
#include "jordan/simplifier.hpp"
#include "jordan/spatial.hpp"
#include "jordan/topology.hpp"

namespace jordan::fuzz {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string fmt(Point p) { return "(" + fmt(p.x) + ", " + fmt(p.y) + ")"; }

void bbox(const ParamPolygon& poly, Point& lo, Point& hi) {
  lo = hi = poly.vertex(0);
  for (const Point& p : poly.vertices()) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
}

std::vector<std::pair<Point, Point>> sides_of(const ParamPolygon& poly) {
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t i = 0; i < poly.size(); ++i) out.emplace_back(poly.vertex(i), poly.vertex(poly.next(i)));
  return out;
}

}  // namespace

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(mix(mix(seed) ^ (index * 0xD1B54A32D192ED03ULL)));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

GeneratedCurve generate_curve(std::uint64_t seed, std::uint64_t index, CurveKind kind) {
  std::mt19937_64 rng = case_rng(seed, index);
  for (int attempt = 1; attempt <= 10000; ++attempt) {
    const double a = uniform(rng, 0.7, 1.3);
    const double b = uniform(rng, 0.7, 1.3);
    const double phi = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const std::size_t k_max = 2 + static_cast<std::size_t>(rng() % 4);  // 2..5
    FourierSeries x{uniform(rng, -0.2, 0.2), {a * std::cos(phi)}, {-b * std::sin(phi)}};
    FourierSeries y{uniform(rng, -0.2, 0.2), {a * std::sin(phi)}, {b * std::cos(phi)}};
    const std::size_t loud = 2 + static_cast<std::size_t>(rng() % (k_max - 1));
    for (std::size_t k = 2; k <= k_max; ++k) {
      double amp = 0.35 / static_cast<double>(k);
      if (kind == CurveKind::Looped && k == loud) amp = uniform(rng, 0.9, 1.4);
      x.a.push_back(amp * uniform(rng, -1.0, 1.0));
      x.b.push_back(amp * uniform(rng, -1.0, 1.0));
      y.a.push_back(amp * uniform(rng, -1.0, 1.0));
      y.b.push_back(amp * uniform(rng, -1.0, 1.0));
    }
    FourierCurve curve(std::move(x), std::move(y));
    if (kind == CurveKind::Looped) return {std::move(curve), k_max, 0.0, attempt};
    const double gap = injectivity_gap(ClosedCurve(curve), 0.05, 512);
    if (gap > 0.05) return {std::move(curve), k_max, gap, attempt};
  }
  throw ConstructionFailed("generate_curve: no curve passed the injectivity filter");
}

std::optional<Point> sample_interior(const SimplePolygon& poly, double margin, std::mt19937_64& rng, int max_tries) {
  Point lo, hi;
  bbox(poly.polygon(), lo, hi);
  for (int k = 0; k < max_tries; ++k) {
    const Point p{uniform(rng, lo.x, hi.x), uniform(rng, lo.y, hi.y)};
    if (contains(poly, p) == Location::Inside && distance_to(poly.polygon(), p) > margin) return p;
  }
  return std::nullopt;
}

std::optional<Point> sample_exterior(const SimplePolygon& poly, double margin, std::mt19937_64& rng, int max_tries) {
  Point lo, hi;
  bbox(poly.polygon(), lo, hi);
  const Point pad = (hi - lo) * 0.5;
  lo = lo - pad;
  hi = hi + pad;
  for (int k = 0; k < max_tries; ++k) {
    const Point p{uniform(rng, lo.x, hi.x), uniform(rng, lo.y, hi.y)};
    if (contains(poly, p) == Location::Outside && distance_to(poly.polygon(), p) > margin) return p;
  }
  return std::nullopt;
}

std::size_t Report::finding_count() const {
  std::size_t total = 0;
  for (const auto& c : cases) total += c.findings.size();
  return total;
}

std::size_t default_threads() {
  if (const char* env = std::getenv("JORDAN_KIT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CaseResult run_case(const Options& options, std::size_t index) {
  CaseResult out;
  out.index = index;
  const Tolerance tau(options.tau);
  auto finding = [&](std::string check, std::string detail) {
    out.findings.push_back({index, std::move(check), std::move(detail)});
  };
  std::optional<GeneratedCurve> gen;
  try {
    gen = generate_curve(options.seed, index);
    out.harmonics = gen->harmonics;
    out.attempts = gen->attempts;
    out.gap = gen->gap;
    const ClosedCurve curve(gen->curve);
    std::mt19937_64 rng = case_rng(options.seed ^ 0x5A5A5A5AULL, index);

    // Reduction: per-step mesh, spacing and subset checks.
    const ParamPolygon input = sample(curve, options.n);
    out.vertices_in = input.size();
    SimplifyOptions so;
    so.on_step = [&](const ReductionStep& step, const ParamPolygon& after) {
      if (step.mesh_after > step.mesh_before) finding("mesh", "mesh grew from " + fmt(step.mesh_before) + " to " + fmt(step.mesh_after));
      if (!satisfies_spacing(after, SpacingRule::AllowHalf)) finding("spacing", "spacing violated after a reduction step");
    };
    const SimplifyResult simplified = simplify(input, tau, so);
    const SimplePolygon& poly = simplified.polygon;
    const ParamPolygon& pg = poly.polygon();
    out.vertices_out = pg.size();
    out.steps = simplified.steps.size();
    for (std::size_t k = 0; k < pg.size(); ++k) {
      const auto& params = input.params();
      const auto it = std::lower_bound(params.begin(), params.end(), pg.param(k));
      if (it == params.end() || *it != pg.param(k) || input.vertex(static_cast<std::size_t>(it - params.begin())) != pg.vertex(k)) {
        finding("subset", "output vertex " + std::to_string(k) + " is not an input vertex");
        break;
      }
    }
    const auto naive = oracle::naive_self_intersections(pg, tau);
    if (!naive.empty()) finding("simple", "oracle found " + std::to_string(naive.size()) + " illegal intersections");

    // Band coverage on a fine sampling.
    const double eps = band_radius(curve, pg, options.m);
    out.eps = eps;
    const SegmentGrid grid(sides_of(pg));
    const std::size_t fine = 64 * options.n;
    std::vector<Point> fine_pts(fine);
    for (std::size_t k = 0; k < fine; ++k) fine_pts[k] = curve(static_cast<double>(k) / static_cast<double>(fine));
    for (std::size_t k = 0; k < fine; ++k) {
      const double d = grid.nearest(fine_pts[k])->distance;
      if (d > eps) {
        finding("band", "fine sample " + std::to_string(k) + " at distance " + fmt(d) + " > eps " + fmt(eps));
        break;
      }
    }

    // Point location against the winding number.
    Point lo, hi;
    bbox(pg, lo, hi);
    for (int k = 0; k < 16; ++k) {
      const Point p{uniform(rng, lo.x - 0.2, hi.x + 0.2), uniform(rng, lo.y - 0.2, hi.y + 0.2)};
      if (distance_to(pg, p) <= 2.0 * tau.value()) continue;
      const bool inside = contains(poly, p, tau) == Location::Inside;
      if (inside != (oracle::winding_number(pg, p, tau) % 2 != 0)) finding("contains", "parity mismatch at " + fmt(p));
    }

    const bool regular = eps < gen->gap / 2.0;
    if (regular) {
      const WitnessReport w = interior_witness(poly, tau);
      out.witness_clearance = w.clearance;
      if (contains(poly, w.e, tau) != Location::Inside) finding("witness", "E = " + fmt(w.e) + " is not inside");
      if (!(w.clearance > eps)) finding("witness", "clearance " + fmt(w.clearance) + " <= eps " + fmt(eps));
    }

    // Separation of one Interior/Exterior pair by a random 5-segment polyline.
    const auto inner = sample_interior(poly, eps, rng);
    const auto outer = sample_exterior(poly, eps, rng);
    if (inner && outer) {
      PathPolyline arc;
      arc.points.push_back(*inner);
      for (int k = 0; k < 4; ++k) {
        arc.points.push_back({uniform(rng, 2.0 * lo.x - hi.x, 2.0 * hi.x - lo.x), uniform(rng, 2.0 * lo.y - hi.y, 2.0 * hi.y - lo.y)});
      }
      arc.points.push_back(*outer);
      const auto hit = check_separation(poly, eps, arc, tau);
      if (!hit) {
        finding("separation", "arc from " + fmt(*inner) + " to " + fmt(*outer) + " misses the polygon");
      } else if (distance_to(pg, *hit) > 10.0 * tau.value()) {
        finding("separation", "reported point " + fmt(*hit) + " is off the polygon");
      }
    } else {
      finding("sampling", "could not sample an Interior/Exterior pair");
    }

    if (options.subdivision && regular) {
      const auto a = sample_interior(poly, 3.0 * eps, rng);
      const auto b = sample_interior(poly, 3.0 * eps, rng);
      if (!a || !b) {
        finding("sampling", "could not sample interior points at margin 3 eps");
      } else {
        const InteriorSubdivision sub(poly, eps, tau);
        const SeparatingPolygon sep = sub.separating_polygon(*a);
        out.separating_vertices = sep.polygon.size();
        for (const Point& v : sep.polygon.vertices()) {
          if (contains(poly, v, tau) != Location::Inside) {
            finding("subdivision", "separating polygon vertex " + fmt(v) + " is not inside");
            break;
          }
        }
        const PolygonLocator inside_sep(sep.polygon.vertices());
        const std::size_t probe = 8 * options.n;
        for (std::size_t k = 0; k < probe; ++k) {
          const Point p = curve(static_cast<double>(k) / static_cast<double>(probe));
          if (inside_sep.inside(p) && contains(sep.polygon, p, tau) == Location::Inside) {
            finding("subdivision", "curve sample " + fmt(p) + " lies inside the separating polygon");
            break;
          }
        }
        if (contains(sep.polygon, *b, tau) != Location::Inside) finding("subdivision", "B = " + fmt(*b) + " is outside the separating polygon");
        bool routed = false;
        try {
          const PathPolyline path = sub.connect(*a, *b);
          routed = true;
          out.path_points = path.points.size();
          double clearance = std::numeric_limits<double>::infinity();
          for (std::size_t k = 0; k + 1 < path.points.size(); ++k) {
            clearance = std::min(clearance, grid.segment_distance(path.points[k], path.points[k + 1]));
          }
          if (path.points.front() != *a || path.points.back() != *b) finding("path", "path endpoints differ from A and B");
          if (!(clearance > eps / 2.0)) finding("path", "clearance " + fmt(clearance) + " <= eps/2");
        } catch (const NotSameFace&) {
          routed = false;
        }
        const auto gp = oracle::grid_path(poly, eps, *a, *b, oracle::make_grid(pg, eps / 4.0));
        out.grid_reachable = gp.has_value();
        if (routed != out.grid_reachable) {
          finding("path", std::string("connect ") + (routed ? "found" : "did not find") + " a path but the grid oracle " +
                              (out.grid_reachable ? "did" : "did not"));
        }
      }
    }
  } catch (const std::exception& e) {
    finding("exception", e.what());
  }
  if (!out.findings.empty() && gen) out.curve = gen->curve;
  return out;
}

Report run(const Options& options) {
  Report report;
  report.options = options;
  report.cases.resize(options.cases);
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads ? options.threads : default_threads(), options.cases));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < options.cases; k = next++) report.cases[k] = run_case(options, k);
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace jordan::fuzz
