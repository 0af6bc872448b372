#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jordan/arrangement.hpp"
#include "jordan/error.hpp"
#include "jordan/geom.hpp"
#include "jordan/routing.hpp"
#include "jordan/simplifier.hpp"
#include "jordan/spatial.hpp"

namespace jordan {

/// Rectangle around side i: 2 eps beyond each endpoint along the side and
/// 2 eps to either side of it. Corners are counterclockwise.
struct SideRectangle {
  std::size_t side = 0;
  std::array<Point, 4> corners;
};

std::vector<SideRectangle> side_rectangles(const ParamPolygon& poly, double eps);

enum class SpecialOrigin { RectangleVertex, InnerIntersection };

/// Rectangle corner or crossing of two rectangles' sides that lies inside
/// the polygon, with its connector: the shortest segment to the boundary.
struct SpecialPoint {
  Point location;
  SpecialOrigin origin = SpecialOrigin::RectangleVertex;
  std::size_t rect_a = 0;
  std::size_t rect_b = 0;  // equals rect_a for a rectangle vertex
  Point foot;              // connector end on the polygon
  std::size_t foot_side = 0;
  double foot_param = 0.0;
};

/// Sorted, deduplicated within tau. Connector ties go to the smallest side
/// index, then to the smaller foot parameter.
std::vector<SpecialPoint> special_points(const SimplePolygon& poly, const std::vector<SideRectangle>& rects,
                                         Tolerance tau = Tolerance{});

/// Counts of connector pairs that cross at an inner point of both, and of
/// pairs sharing a positive-length piece.
struct ConnectorConflicts {
  std::size_t crossings = 0;
  std::size_t overlaps = 0;
};
ConnectorConflicts connector_conflicts(const std::vector<SpecialPoint>& specials, Tolerance tau = Tolerance{});

enum class FaceRole { Band, InteriorFace, Exterior };
const char* to_string(FaceRole role);

struct FaceDescriptor {
  std::size_t id = 0;
  FaceRole role = FaceRole::InteriorFace;
  double area = 0.0;
  std::size_t boundary_size = 0;
};

enum class VertexOrigin {
  Special,            // a special point
  ConnectorCrossing,  // a connector meeting a rectangle side or another connector
};

/// Boundary of the face that contains a given Interior point. Vertices are
/// special points, or points on a connector whose remaining piece is itself
/// a shortest segment to the polygon.
struct SeparatingPolygon {
  SimplePolygon polygon;
  std::size_t face = 0;
  std::size_t raw_vertices = 0;  // face boundary before collinear vertices were dropped
  std::vector<VertexOrigin> origins;
  std::size_t special_count() const;
};

class NotSameFace : public ConstructionFailed {
 public:
  NotSameFace(FaceDescriptor a, FaceDescriptor b);
  const FaceDescriptor& face_a() const { return a_; }
  const FaceDescriptor& face_b() const { return b_; }

 private:
  FaceDescriptor a_;
  FaceDescriptor b_;
};

/// Planar subdivision of the polygon interior by the polygon, its side
/// rectangles clipped to the interior, and the connectors of all special
/// points.
class InteriorSubdivision {
 public:
  /// Throws InvalidArgument unless eps > 0 and tau <= eps / 100.
  InteriorSubdivision(SimplePolygon poly, double eps, Tolerance tau = Tolerance{});

  const SimplePolygon& polygon() const { return poly_; }
  double eps() const { return eps_; }
  Tolerance tolerance() const { return tau_; }
  const std::vector<SideRectangle>& rectangles() const { return rects_; }
  const std::vector<SpecialPoint>& specials() const { return specials_; }
  const Arrangement& arrangement() const { return *arr_; }

  FaceDescriptor describe(std::size_t face) const;
  std::vector<FaceDescriptor> faces() const;
  std::vector<Point> face_boundary(std::size_t face) const;

  /// Face holding p; throws ConstructionFailed if p lies on an edge.
  std::size_t face_of(Point p) const;

  /// Throws InvalidArgument unless p is Interior, ConstructionFailed if the
  /// face boundary cannot be certified.
  SeparatingPolygon separating_polygon(Point p) const;

  /// Interior path from a to b with clearance above eps / 2. Throws
  /// NotSameFace when a and b lie in different faces. Safe to call from
  /// several threads.
  PathPolyline connect(Point a, Point b) const;

 private:
  struct RouteCache;

  FaceRole role_of(std::size_t face) const;
  bool path_clear(const PathPolyline& path) const;

  SimplePolygon poly_;
  double eps_;
  Tolerance tau_;
  std::vector<SideRectangle> rects_;
  std::vector<SpecialPoint> specials_;
  std::optional<Arrangement> arr_;
  std::optional<SegmentGrid> sides_;
  std::optional<PolygonLocator> locator_;
  std::shared_ptr<RouteCache> cache_;  // triangulation of the last routed face
};

SeparatingPolygon separating_polygon(const SimplePolygon& poly, double eps, Point a, Tolerance tau = Tolerance{});
PathPolyline connect(const SimplePolygon& poly, double eps, Point a, Point b, Tolerance tau = Tolerance{});

}  // namespace jordan
