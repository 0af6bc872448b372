#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "jordan/curve.hpp"
#include "jordan/geom.hpp"

namespace jordan {

enum class IntersectionKind { AdjacentDegenerate, NonAdjacentCross };

/// Shared geometry between polygon sides beyond a common vertex.
///
/// Indices are 0-based. For AdjacentDegenerate, sides i and j = (i+1) mod n
/// overlap beyond vertex j (or side i has zero length). For NonAdjacentCross,
/// sides i < j - 1 intersect and (i, j) != (0, n-1).
struct IllegalIntersection {
  IntersectionKind kind = IntersectionKind::NonAdjacentCross;
  std::size_t i = 0;
  std::size_t j = 0;
  Point witness;                   // offending vertex, crossing point, or overlap midpoint
  std::optional<Segment> overlap;  // set for collinear overlaps of positive length

  friend bool operator<(const IllegalIntersection& l, const IllegalIntersection& r) {
    if (l.kind != r.kind) return l.kind == IntersectionKind::AdjacentDegenerate;
    if (l.i != r.i) return l.i < r.i;
    return l.j < r.j;
  }
};

enum class ScanMethod {
  Naive,  // row-major all-pairs scan with bounding-box rejection, stops at first hit
  Sweep,  // x-sorted sweep collecting every hit, then the lexicographic minimum
};

/// Adjacent-side degeneracy at vertex k+1: side k has zero length, P_k is an
/// inner point of side k+1, P_{k+2} is an inner point of side k, or P_k and
/// P_{k+2} coincide.
std::optional<Point> adjacent_degeneracy(const ParamPolygon& poly, std::size_t k, Tolerance tau);

/// Lexicographically smallest illegal intersection (adjacent kind first).
std::optional<IllegalIntersection> find_illegal_intersection(const ParamPolygon& poly, Tolerance tau,
                                                             ScanMethod method = ScanMethod::Naive);

/// Removes vertex (k+1) mod n. Throws InvalidArgument when sides k and k+1
/// are not degenerate, DegenerateCurve when fewer than 3 vertices would remain.
ParamPolygon fix_adjacent(const ParamPolygon& poly, std::size_t k, Tolerance tau = Tolerance{});

/// Cuts the loop closed by a non-adjacent crossing and keeps the candidate
/// polygon spanning more than half of the parameter circle.
ParamPolygon cut_loop(const ParamPolygon& poly, const IllegalIntersection& x);

enum class PolygonOrientation { CCW, CW };

/// A polygon certified free of illegal intersections, with nonzero area.
class SimplePolygon {
 public:
  /// Throws ConstructionFailed if poly is not simple or has zero area.
  static SimplePolygon certify(ParamPolygon poly, Tolerance tau = Tolerance{},
                               ScanMethod method = ScanMethod::Naive);

  const ParamPolygon& polygon() const { return poly_; }
  PolygonOrientation orientation() const { return orientation_; }
  std::size_t size() const { return poly_.size(); }
  const std::vector<Point>& vertices() const { return poly_.vertices(); }
  Point vertex(std::size_t i) const { return poly_.vertex(i); }

 private:
  SimplePolygon(ParamPolygon poly, PolygonOrientation o) : poly_(std::move(poly)), orientation_(o) {}
  friend struct SimplifyAccess;

  ParamPolygon poly_;
  PolygonOrientation orientation_;
};

struct ReductionStep {
  IntersectionKind kind;
  std::size_t i;
  std::size_t j;
  std::size_t vertices_before;
  std::size_t vertices_after;
  double mesh_before;
  double mesh_after;
  double new_side_length;
  bool kept_loop;  // cut_loop kept the closed loop rather than the outer polygon
};

struct SimplifyOptions {
  ScanMethod method = ScanMethod::Naive;
  /// Called after every reduction with the step and the reduced polygon.
  std::function<void(const ReductionStep&, const ParamPolygon&)> on_step;
};

struct SimplifyResult {
  SimplePolygon polygon;
  std::vector<ReductionStep> steps;
};

/// Repeats find_illegal_intersection + (fix_adjacent | cut_loop) until the
/// polygon is simple. Every step must keep the spacing condition (closure
/// rule, see SpacingRule::AllowHalf); a violation throws ConstructionFailed.
SimplifyResult simplify(const ParamPolygon& poly, Tolerance tau = Tolerance{}, const SimplifyOptions& options = {});

}  // namespace jordan
