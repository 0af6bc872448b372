#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "jordan/geom.hpp"
#include "jordan/spatial.hpp"

namespace jordan {

enum class EdgeRole : std::uint8_t { Polygon, Rectangle, Connector };

struct ArrangementSegment {
  Point a;
  Point b;
  EdgeRole role;
};

/// Planar arrangement of line segments with half-edge faces.
///
/// Intersection points closer than tau are merged into one vertex. Half-edge
/// h and h^1 are twins; face(h) lies to the left of h, so bounded faces are
/// traversed counterclockwise.
class Arrangement {
 public:
  using KeepEdge = std::function<bool(Point a, Point b, EdgeRole role)>;

  /// Sites are inserted as vertices before any intersection point and are
  /// reported by is_site(); edges rejected by keep are dropped, then vertices
  /// of degree one are pruned repeatedly.
  Arrangement(std::span<const ArrangementSegment> segments, std::span<const Point> sites, Tolerance tau,
              const KeepEdge& keep = {});

  std::size_t vertex_count() const { return positions_.size(); }
  std::size_t half_edge_count() const { return origin_.size(); }
  std::size_t face_count() const { return face_first_.size(); }

  Point position(std::size_t v) const { return positions_[v]; }
  bool is_site(std::size_t v) const { return site_[v] != 0; }
  std::size_t origin(std::size_t h) const { return origin_[h]; }
  std::size_t target(std::size_t h) const { return origin_[h ^ 1]; }
  std::size_t next(std::size_t h) const { return next_[h]; }
  std::size_t face(std::size_t h) const { return face_[h]; }
  EdgeRole role(std::size_t h) const { return role_[h >> 1]; }
  double face_area(std::size_t f) const { return face_area_[f]; }
  /// Half-edges leaving v, counterclockwise by angle.
  const std::vector<std::size_t>& outgoing(std::size_t v) const { return outgoing_[v]; }

  /// Vertex ids around face f, in traversal order.
  std::vector<std::size_t> face_cycle(std::size_t f) const;

  /// Face whose closure contains p, located through the nearest edge.
  /// Returns nullopt when p lies within tau of an edge.
  std::optional<std::size_t> face_of(Point p) const;

 private:
  std::vector<Point> positions_;
  std::vector<std::uint8_t> site_;
  std::vector<std::size_t> origin_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> face_;
  std::vector<EdgeRole> role_;
  std::vector<std::vector<std::size_t>> outgoing_;  // sorted by angle, counterclockwise
  std::vector<std::size_t> face_first_;
  std::vector<double> face_area_;
  std::optional<SegmentGrid> edge_grid_;
  Tolerance tau_;
};

}  // namespace jordan
