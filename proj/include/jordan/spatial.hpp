#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jordan/geom.hpp"

namespace jordan {

/// Uniform-grid bucket index over a fixed set of segments. Nearest queries
/// return exactly the brute-force minimum over per-segment distances.
class SegmentGrid {
 public:
  struct Hit {
    std::size_t id = 0;
    double distance = 0.0;
    double param = 0.0;  // foot parameter along the segment, in [0,1]
  };

  SegmentGrid(std::vector<std::pair<Point, Point>> segments, double cell_size = 0.0);

  std::size_t size() const { return segments_.size(); }
  const std::pair<Point, Point>& segment(std::size_t id) const { return segments_[id]; }

  /// Nearest segment; ties resolved toward the smaller id.
  std::optional<Hit> nearest(Point p) const;

  /// Sorted unique ids of segments whose bounding box meets [lo, hi].
  std::vector<std::size_t> candidates(Point lo, Point hi) const;

  /// True iff some segment lies within distance r of p.
  bool any_within(Point p, double r) const;

  /// Minimum distance from the closed segment ab to the indexed segments.
  double segment_distance(Point a, Point b) const;

 private:
  std::size_t cell_x(double x) const;
  std::size_t cell_y(double y) const;
  template <typename Fn>
  void visit_cells(std::size_t x0, std::size_t y0, std::size_t x1, std::size_t y1, Fn&& fn) const;

  std::vector<std::pair<Point, Point>> segments_;
  Point origin_;
  double cell_ = 1.0;
  std::size_t nx_ = 1;
  std::size_t ny_ = 1;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> entries_;
};

/// Even-odd point location against a closed ring using horizontal strips.
/// Agrees with the perturbed-ray crossing count for points off the boundary.
class PolygonLocator {
 public:
  explicit PolygonLocator(std::span<const Point> ring);

  bool inside(Point p) const;

 private:
  std::vector<Point> ring_;
  double y0_ = 0.0;
  double strip_ = 1.0;
  std::size_t strips_ = 1;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> entries_;
};

/// Hash-grid table merging points that lie within tau of an earlier one.
class PointSnapper {
 public:
  explicit PointSnapper(double tau);

  /// Id of the first stored point within tau of p, if any.
  std::optional<std::size_t> find(Point p) const;
  /// Existing id within tau, or a fresh id for p.
  std::size_t insert(Point p);

  const std::vector<Point>& points() const { return points_; }

 private:
  std::int64_t key(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }

  double tau_;
  double cell_;
  std::vector<Point> points_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

}  // namespace jordan
