#include "jordan/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <unordered_set>

#include "jordan/regions.hpp"
#include "jordan/topology.hpp"

namespace jordan {

std::vector<SideRectangle> side_rectangles(const ParamPolygon& poly, double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("side_rectangles needs eps > 0");
  std::vector<SideRectangle> out;
  out.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point p = poly.vertex(i);
    const Point q = poly.vertex(poly.next(i));
    const double len = distance(p, q);
    if (!(len > 0.0)) throw InvalidArgument("side_rectangles: zero-length side");
    const Point u = (q - p) * (2.0 * eps / len);
    const Point n{-u.y, u.x};
    out.push_back({i, {p - u - n, q + u - n, q + u + n, p - u + n}});
  }
  return out;
}

namespace {

std::vector<std::pair<Point, Point>> polygon_sides(const ParamPolygon& poly) {
  std::vector<std::pair<Point, Point>> out;
  out.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) out.emplace_back(poly.vertex(i), poly.vertex(poly.next(i)));
  return out;
}

// Nearest boundary point with ties to the smallest side, then smallest parameter.
void attach_connector(const SegmentGrid& sides, SpecialPoint& sp, double tau) {
  const auto best = sides.nearest(sp.location);
  const Point p = sp.location;
  const double r = best->distance + tau;
  std::size_t side = best->id;
  double param = best->param;
  for (std::size_t id : sides.candidates({p.x - r, p.y - r}, {p.x + r, p.y + r})) {
    const auto& [a, b] = sides.segment(id);
    const double s = closest_parameter(p, a, b);
    if (distance(p, lerp(a, b, s)) > r) continue;
    if (id < side || (id == side && s < param)) {
      side = id;
      param = s;
    }
  }
  const auto& [a, b] = sides.segment(side);
  sp.foot = lerp(a, b, param);
  sp.foot_side = side;
  sp.foot_param = param;
}

bool in_rectangle(const SideRectangle& r, Point p) {
  for (int k = 0; k < 4; ++k) {
    if (cross(r.corners[(k + 1) % 4] - r.corners[k], p - r.corners[k]) < 0.0) return false;
  }
  return true;
}

}  // namespace

std::vector<SpecialPoint> special_points(const SimplePolygon& poly, const std::vector<SideRectangle>& rects,
                                         Tolerance tau) {
  const double t = tau.value();
  const SegmentGrid sides(polygon_sides(poly.polygon()));
  const PolygonLocator locator(poly.vertices());
  auto interior = [&](Point p) { return locator.inside(p) && !sides.any_within(p, t); };

  std::vector<SpecialPoint> raw;
  for (std::size_t r = 0; r < rects.size(); ++r) {
    for (const Point& c : rects[r].corners) {
      if (interior(c)) raw.push_back({c, SpecialOrigin::RectangleVertex, r, r, {}, 0, 0.0});
    }
  }
  std::vector<std::pair<Point, Point>> rect_sides;
  rect_sides.reserve(4 * rects.size());
  for (const auto& r : rects) {
    for (int k = 0; k < 4; ++k) rect_sides.emplace_back(r.corners[k], r.corners[(k + 1) % 4]);
  }
  if (!rect_sides.empty()) {
    const SegmentGrid grid(rect_sides);
    for (std::size_t s = 0; s < rect_sides.size(); ++s) {
      const auto [a, b] = rect_sides[s];
      const Point lo{std::min(a.x, b.x), std::min(a.y, b.y)};
      const Point hi{std::max(a.x, b.x), std::max(a.y, b.y)};
      for (std::size_t u : grid.candidates(lo, hi)) {
        if (u <= s || u / 4 == s / 4) continue;
        const auto [c, d] = rect_sides[u];
        const SegmentIntersection hit = segment_intersection(a, b, c, d, tau);
        if (hit.kind != SegmentIntersection::Kind::Point) continue;
        const Point e = hit.first;
        if (!is_inner_point(e, a, b, tau) || !is_inner_point(e, c, d, tau) || !interior(e)) continue;
        raw.push_back({e, SpecialOrigin::InnerIntersection, s / 4, u / 4, {}, 0, 0.0});
      }
    }
  }

  PointSnapper snap(t);
  std::vector<SpecialPoint> out;
  for (const auto& sp : raw) {
    if (snap.find(sp.location)) continue;
    snap.insert(sp.location);
    out.push_back(sp);
  }
  std::sort(out.begin(), out.end(), [](const SpecialPoint& l, const SpecialPoint& r) {
    return l.location.x < r.location.x || (l.location.x == r.location.x && l.location.y < r.location.y);
  });
  for (auto& sp : out) attach_connector(sides, sp, t);
  return out;
}

ConnectorConflicts connector_conflicts(const std::vector<SpecialPoint>& specials, Tolerance tau) {
  ConnectorConflicts out;
  std::vector<std::pair<Point, Point>> segs;
  for (const auto& sp : specials) segs.emplace_back(sp.location, sp.foot);
  if (segs.empty()) return out;
  const SegmentGrid grid(segs);
  for (std::size_t s = 0; s < segs.size(); ++s) {
    const auto [a, b] = segs[s];
    for (std::size_t u : grid.candidates({std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)})) {
      if (u <= s) continue;
      const auto [c, d] = segs[u];
      const SegmentIntersection hit = segment_intersection(a, b, c, d, tau);
      if (hit.kind == SegmentIntersection::Kind::Overlap) {
        ++out.overlaps;
      } else if (hit.kind == SegmentIntersection::Kind::Point && is_inner_point(hit.first, a, b, tau) &&
                 is_inner_point(hit.first, c, d, tau)) {
        ++out.crossings;
      }
    }
  }
  return out;
}

const char* to_string(FaceRole role) {
  switch (role) {
    case FaceRole::Band:
      return "band";
    case FaceRole::InteriorFace:
      return "interior-face";
    case FaceRole::Exterior:
      return "exterior";
  }
  return "?";
}

namespace {

std::string describe_face(const FaceDescriptor& f) {
  return "face " + std::to_string(f.id) + " (" + to_string(f.role) + ", " + std::to_string(f.boundary_size) +
         " vertices)";
}

std::string describe_pair(const FaceDescriptor& a, const FaceDescriptor& b) {
  return "points lie in different faces: " + describe_face(a) + " and " + describe_face(b);
}

}  // namespace

NotSameFace::NotSameFace(FaceDescriptor a, FaceDescriptor b)
    : ConstructionFailed(describe_pair(a, b)), a_(a), b_(b) {}

struct InteriorSubdivision::RouteCache {
  std::mutex mu;
  std::optional<std::size_t> face;
  std::shared_ptr<const TriangulatedRing> mesh;
};

InteriorSubdivision::InteriorSubdivision(SimplePolygon poly, double eps, Tolerance tau)
    : poly_(std::move(poly)), eps_(eps), tau_(tau), cache_(std::make_shared<RouteCache>()) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidArgument("subdivision needs a finite eps > 0");
  tau.check_against_band(eps);
  rects_ = side_rectangles(poly_.polygon(), eps);
  specials_ = special_points(poly_, rects_, tau);
  sides_.emplace(polygon_sides(poly_.polygon()));
  locator_.emplace(poly_.vertices());

  std::vector<ArrangementSegment> segs;
  segs.reserve(poly_.size() * 5 + specials_.size());
  for (std::size_t i = 0; i < poly_.size(); ++i) {
    segs.push_back({poly_.vertex(i), poly_.vertex(poly_.polygon().next(i)), EdgeRole::Polygon});
  }
  for (const auto& r : rects_) {
    for (int k = 0; k < 4; ++k) segs.push_back({r.corners[k], r.corners[(k + 1) % 4], EdgeRole::Rectangle});
  }
  std::vector<Point> sites;
  sites.reserve(specials_.size());
  for (const auto& sp : specials_) {
    sites.push_back(sp.location);
    if (sp.location != sp.foot) segs.push_back({sp.location, sp.foot, EdgeRole::Connector});
  }
  const PolygonLocator& loc = *locator_;
  arr_.emplace(segs, sites, tau, [&loc](Point a, Point b, EdgeRole role) {
    return role != EdgeRole::Rectangle || loc.inside(lerp(a, b, 0.5));
  });
}

FaceRole InteriorSubdivision::role_of(std::size_t face) const {
  const Arrangement& arr = *arr_;
  if (!(arr.face_area(face) > 0.0)) return FaceRole::Exterior;
  // Probe just left of the longest boundary edge.
  const auto cycle = arr.face_cycle(face);
  double best = -1.0;
  Point probe;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const Point a = arr.position(cycle[k]);
    const Point b = arr.position(cycle[(k + 1) % cycle.size()]);
    const double len = distance(a, b);
    if (len <= best) continue;
    best = len;
    const Point d = (b - a) * (1.0 / len);
    probe = lerp(a, b, 0.5) + Point{-d.y, d.x} * (1e-3 * std::min(len, eps_));
  }
  const double r = 3.0 * eps_;
  for (std::size_t id : sides_->candidates({probe.x - r, probe.y - r}, {probe.x + r, probe.y + r})) {
    if (in_rectangle(rects_[id], probe)) return FaceRole::Band;
  }
  return FaceRole::InteriorFace;
}

FaceDescriptor InteriorSubdivision::describe(std::size_t face) const {
  return {face, role_of(face), arr_->face_area(face), arr_->face_cycle(face).size()};
}

std::vector<FaceDescriptor> InteriorSubdivision::faces() const {
  std::vector<FaceDescriptor> out;
  for (std::size_t f = 0; f < arr_->face_count(); ++f) out.push_back(describe(f));
  return out;
}

std::vector<Point> InteriorSubdivision::face_boundary(std::size_t face) const {
  std::vector<Point> out;
  for (std::size_t v : arr_->face_cycle(face)) out.push_back(arr_->position(v));
  return out;
}

std::size_t InteriorSubdivision::face_of(Point p) const {
  const auto f = arr_->face_of(p);
  if (!f) throw ConstructionFailed("point lies on an edge of the subdivision");
  return *f;
}

SeparatingPolygon InteriorSubdivision::separating_polygon(Point p) const {
  if (classify(poly_, eps_, p, tau_) != RegionLabel::Interior) {
    throw InvalidArgument("separating_polygon needs an Interior point");
  }
  const Arrangement& arr = *arr_;
  const std::size_t f = face_of(p);
  if (!(arr.face_area(f) > 0.0)) throw ConstructionFailed("point is not enclosed by a bounded face");
  if (role_of(f) == FaceRole::Band) {
    throw ConstructionFailed("point lies inside the rectangle cover of the polygon (" + describe_face(describe(f)) + ")");
  }
  const auto cycle = arr.face_cycle(f);
  {
    std::unordered_set<std::size_t> seen;
    for (std::size_t v : cycle) {
      if (!seen.insert(v).second) throw ConstructionFailed("face boundary touches itself");
    }
  }
  const std::size_t m = cycle.size();
  std::vector<Point> ring;
  std::vector<VertexOrigin> origins;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t v = cycle[k];
    VertexOrigin origin = VertexOrigin::Special;
    if (!arr.is_site(v)) {
      const Point a = arr.position(cycle[(k + m - 1) % m]);
      const Point c = arr.position(cycle[(k + 1) % m]);
      if (orient(a, arr.position(v), c, tau_) == Orientation::Collinear) continue;
      const auto& out = arr.outgoing(v);
      const bool on_connector =
          std::any_of(out.begin(), out.end(), [&](std::size_t h) { return arr.role(h) == EdgeRole::Connector; });
      if (!on_connector) throw ConstructionFailed("face boundary vertex is neither a special point nor on a connector");
      origin = VertexOrigin::ConnectorCrossing;
    }
    ring.push_back(arr.position(v));
    origins.push_back(origin);
  }
  if (ring.size() < 3) throw ConstructionFailed("face boundary is degenerate");
  std::vector<double> params(ring.size());
  for (std::size_t k = 0; k < ring.size(); ++k) params[k] = static_cast<double>(k) / static_cast<double>(ring.size());
  ParamPolygon pg(std::move(ring), std::move(params));
  return {SimplePolygon::certify(std::move(pg), tau_, ScanMethod::Sweep), f, m, std::move(origins)};
}

std::size_t SeparatingPolygon::special_count() const {
  return static_cast<std::size_t>(std::count(origins.begin(), origins.end(), VertexOrigin::Special));
}

bool InteriorSubdivision::path_clear(const PathPolyline& path) const {
  const double limit = 0.5 * eps_;
  if (path.points.size() == 1) return sides_->nearest(path.points[0])->distance > limit;
  for (std::size_t k = 0; k + 1 < path.points.size(); ++k) {
    if (!(sides_->segment_distance(path.points[k], path.points[k + 1]) > limit)) return false;
  }
  return true;
}

PathPolyline InteriorSubdivision::connect(Point a, Point b) const {
  if (classify(poly_, eps_, a, tau_) != RegionLabel::Interior || classify(poly_, eps_, b, tau_) != RegionLabel::Interior) {
    throw InvalidArgument("connect needs two Interior points");
  }
  if (a == b) return {{a}};
  const std::size_t fa = face_of(a);
  const std::size_t fb = face_of(b);
  if (fa != fb) throw NotSameFace(describe(fa), describe(fb));

  std::shared_ptr<const TriangulatedRing> mesh;
  {
    std::lock_guard lock(cache_->mu);
    if (cache_->face != fa) {
      cache_->mesh = std::make_shared<const TriangulatedRing>(separating_polygon(a).polygon.vertices());
      cache_->face = fa;
    }
    mesh = cache_->mesh;
  }
  PathPolyline path = mesh->route(a, b);
  if (path_clear(path)) return path;
  path = mesh->route(a, b, true);
  if (path_clear(path)) return path;
  throw ConstructionFailed("connect: routed path comes within eps/2 of the boundary");
}

SeparatingPolygon separating_polygon(const SimplePolygon& poly, double eps, Point a, Tolerance tau) {
  return InteriorSubdivision(poly, eps, tau).separating_polygon(a);
}

PathPolyline connect(const SimplePolygon& poly, double eps, Point a, Point b, Tolerance tau) {
  return InteriorSubdivision(poly, eps, tau).connect(a, b);
}

}  // namespace jordan
