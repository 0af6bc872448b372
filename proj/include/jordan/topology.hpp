#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "jordan/curve.hpp"
#include "jordan/geom.hpp"
#include "jordan/simplifier.hpp"

namespace jordan {

bool is_simple(const ParamPolygon& poly, Tolerance tau, ScanMethod method = ScanMethod::Naive);

enum class Location { Inside, Outside, OnBoundary };

/// Even-odd crossing count along a ray whose direction is rotated by a fixed
/// irrational step until it passes no vertex and parallels no side within tau.
Location contains(const SimplePolygon& poly, Point p, Tolerance tau = Tolerance{});
Location contains_ring(std::span<const Point> ring, Point p, Tolerance tau = Tolerance{});

/// Minimum over sides of the point-to-segment distance.
double distance_to(const ParamPolygon& poly, Point p);
double distance_to_ring(std::span<const Point> ring, Point p);

/// Vertex indices (a < b) of maximal distance, ties to the smallest pair.
std::pair<std::size_t, std::size_t> diameter_pair(std::span<const Point> vertices);
std::pair<std::size_t, std::size_t> diameter_pair(const ParamPolygon& poly);

/// Coordinates in the frame where A is the origin and A->B is the +y axis.
struct ChordFrame {
  Point origin;
  Point x_axis;
  Point y_axis;
  double length;

  ChordFrame(Point a, Point b);
  Point to_local(Point p) const { return {dot(p - origin, x_axis), dot(p - origin, y_axis)}; }
  Point to_world(Point q) const { return origin + x_axis * q.x + y_axis * q.y; }
};

/// The two broken lines joining vertex A to vertex B. `left` is the chain
/// owning the leftmost crossing of the midline in the ChordFrame of (A, B).
struct ChainPair {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  std::vector<Point> left_points;
  std::vector<Point> right_points;
};

/// Crossing of the horizontal line y = h (local frame) by a polygon side.
struct MidlineCrossing {
  double x;              // local abscissa
  std::size_t side;      // side index
  bool on_chain_ab;      // side lies on the chain a..b in cycle order
};

/// Crossings of the local line y = h, sorted by x. A vertex lying on the line
/// is reported once per side pair by the half-open rule.
std::vector<MidlineCrossing> midline_crossings(const ParamPolygon& poly, const ChordFrame& frame, double h,
                                               std::size_t a, std::size_t b);

/// Height D/2 of the perpendicular bisector of A->B, nudged by irrational
/// multiples of tau while some side lies along it.
double midline_height(const ParamPolygon& poly, const ChordFrame& frame, Tolerance tau);

ChainPair split_chains(const SimplePolygon& poly, std::size_t a, std::size_t b);

/// Distance from p to the open polyline through pts.
double distance_to_chain(std::span<const Point> pts, Point p);

}  // namespace jordan
