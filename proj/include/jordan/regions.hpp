#pragma once

#include <cstddef>
#include <optional>

#include "jordan/geom.hpp"
#include "jordan/simplifier.hpp"

namespace jordan {

enum class RegionLabel { Interior, Exterior, BoundaryBand };

/// BoundaryBand within eps of the polygon, otherwise Interior or Exterior by
/// point location.
RegionLabel classify(const SimplePolygon& poly, double eps, Point p, Tolerance tau = Tolerance{});

const char* to_string(RegionLabel label);

/// Interior point built from the longest vertex chord A-B: the midline gamma
/// is crossed by the chains L and R, C is the rightmost L crossing, D the next
/// R crossing, and E on CD is equidistant from both chains.
struct WitnessReport {
  std::size_t index_a = 0;
  std::size_t index_b = 0;
  Point a;
  Point b;
  Point gamma_start;  // midline clipped to the padded bounding box
  Point gamma_end;
  Point c;
  Point d;
  Point e;
  double clearance = 0.0;  // min(d(E, L), d(E, R))
  double distance_l = 0.0;
  double distance_r = 0.0;
  /// 0: rightmost-L construction, 1: mirrored construction, 2: first
  /// interior L/R gap along gamma.
  int variant = 0;
  int bisection_iterations = 0;
};

/// Throws ConstructionFailed when gamma meets no side.
WitnessReport interior_witness(const SimplePolygon& poly, Tolerance tau = Tolerance{});

/// First point, walking along arc, where it meets the polygon boundary.
/// Throws InvalidArgument unless arc runs from an Interior to an Exterior point.
std::optional<Point> check_separation(const SimplePolygon& poly, double eps, const PathPolyline& arc,
                                      Tolerance tau = Tolerance{});

}  // namespace jordan
