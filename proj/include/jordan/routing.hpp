#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jordan/geom.hpp"
#include "jordan/spatial.hpp"

namespace jordan {

using Triangle = std::array<std::size_t, 3>;

/// Ear-clipping triangulation of a simple ring (either orientation).
/// Triangles are counterclockwise and index into the ring.
std::vector<Triangle> ear_clip(std::span<const Point> ring);

/// Triangulated simple ring with triangle adjacency, for shortest paths.
class TriangulatedRing {
 public:
  explicit TriangulatedRing(std::vector<Point> ring);

  const std::vector<Point>& ring() const { return ring_; }
  const std::vector<Triangle>& triangles() const { return tris_; }

  /// Triangle containing p (closed), or the nearest one within rounding.
  /// Throws ConstructionFailed when p is outside.
  std::size_t locate(Point p) const;

  /// Shortest path from a to b through the triangle strip joining them.
  /// With midpoints = true the path runs through portal midpoints instead.
  PathPolyline route(Point a, Point b, bool midpoints = false) const;

 private:
  std::vector<Point> ring_;
  std::vector<Triangle> tris_;
  std::vector<std::array<std::size_t, 3>> neighbor_;  // across edge (k, k+1)
  std::optional<SegmentGrid> grid_;                   // triangle edges, id = 3 t + k
};

}  // namespace jordan
