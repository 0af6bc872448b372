#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jordan/curve.hpp"
#include "jordan/geom.hpp"
#include "jordan/simplifier.hpp"

namespace jordan::fuzz {

/// Per-case generator: mt19937_64 keyed by (seed, index).
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [lo, hi) built from the top 53 bits of one draw.
double uniform(std::mt19937_64& rng, double lo, double hi);

enum class CurveKind {
  Simple,  // ellipse plus small harmonics, rejected until the injectivity gap is large
  Looped,  // one dominant harmonic, usually self-intersecting
};

struct GeneratedCurve {
  FourierCurve curve;
  std::size_t harmonics = 0;
  double gap = 0.0;  // injectivity_gap(s = 0.05, m = 512); 0 for looped curves
  int attempts = 1;
};

/// Deterministic in (seed, index). Simple curves satisfy gap > 0.05; throws
/// ConstructionFailed if none is found within 10000 attempts.
GeneratedCurve generate_curve(std::uint64_t seed, std::uint64_t index, CurveKind kind = CurveKind::Simple);

/// Interior point at distance > margin from the polygon, sampled uniformly
/// from its bounding box; nullopt after max_tries rejections.
std::optional<Point> sample_interior(const SimplePolygon& poly, double margin, std::mt19937_64& rng,
                                     int max_tries = 100000);

/// Exterior point at distance > margin, from the bounding box grown by 50%.
std::optional<Point> sample_exterior(const SimplePolygon& poly, double margin, std::mt19937_64& rng,
                                     int max_tries = 100000);

struct Finding {
  std::size_t case_index = 0;
  std::string check;
  std::string detail;
};

struct CaseResult {
  std::size_t index = 0;
  std::size_t harmonics = 0;
  int attempts = 0;
  double gap = 0.0;
  double eps = 0.0;
  std::size_t vertices_in = 0;
  std::size_t vertices_out = 0;
  std::size_t steps = 0;
  double witness_clearance = 0.0;
  std::size_t separating_vertices = 0;
  std::size_t path_points = 0;
  bool grid_reachable = false;
  std::vector<Finding> findings;
  std::optional<FourierCurve> curve;  // kept only when the case has findings
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::size_t n = 512;
  std::size_t m = 16;
  double tau = Tolerance::kDefault;
  std::size_t threads = 0;  // 0: JORDAN_KIT_THREADS or the hardware concurrency
  bool subdivision = true;       // separating polygon, path and grid comparison per case
};

struct Report {
  Options options;
  std::vector<CaseResult> cases;  // in index order
  std::size_t finding_count() const;
};

/// Worker count from JORDAN_KIT_THREADS, else the hardware concurrency.
std::size_t default_threads();

CaseResult run_case(const Options& options, std::size_t index);
Report run(const Options& options);

}  // namespace jordan::fuzz
