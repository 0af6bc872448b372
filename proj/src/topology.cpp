#include "jordan/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "jordan/error.hpp"

namespace jordan {

bool is_simple(const ParamPolygon& poly, Tolerance tau, ScanMethod method) {
  return !find_illegal_intersection(poly, tau, method).has_value();
}

namespace {

// Squared point_segment_distance; same clamped projection, no hypot.
double segment_distance2(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  const double s = len2 == 0.0 ? 0.0 : std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  const Point q = a + d * s - p;
  return dot(q, q);
}

}  // namespace

double distance_to_ring(std::span<const Point> ring, Point p) {
  const std::size_t n = ring.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, segment_distance2(p, ring[i], ring[(i + 1) % n]));
  }
  return std::sqrt(best);
}

double distance_to(const ParamPolygon& poly, Point p) { return distance_to_ring(poly.vertices(), p); }

double distance_to_chain(std::span<const Point> pts, Point p) {
  if (pts.size() == 1) return distance(p, pts[0]);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) best = std::min(best, segment_distance2(p, pts[i], pts[i + 1]));
  return std::sqrt(best);
}

Location contains_ring(std::span<const Point> ring, Point p, Tolerance tau) {
  const double t = tau.value();
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (segment_distance2(p, ring[i], ring[(i + 1) % n]) <= t * t) return Location::OnBoundary;
  }
  const double step = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int attempt = 0; attempt < 256; ++attempt) {
    const double angle = step * attempt;
    const Point dir{std::cos(angle), std::sin(angle)};
    bool clear = true;
    for (std::size_t i = 0; i < n && clear; ++i) {
      const Point w = ring[i] - p;
      if (dot(w, dir) > -t && std::abs(cross(dir, w)) <= t) clear = false;
      const Point side = ring[(i + 1) % n] - ring[i];
      const double c = cross(dir, side);
      if (c * c <= t * t * dot(side, side)) clear = false;
    }
    if (!clear) continue;
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = ring[i] - p;
      const Point b = ring[(i + 1) % n] - p;
      const double ca = cross(dir, a);
      const double cb = cross(dir, b);
      if ((ca > 0.0) == (cb > 0.0)) continue;
      const Point hit = a + (b - a) * (ca / (ca - cb));
      if (dot(hit, dir) > 0.0) inside = !inside;
    }
    return inside ? Location::Inside : Location::Outside;
  }
  throw ConstructionFailed("contains: no non-degenerate ray direction found");
}

Location contains(const SimplePolygon& poly, Point p, Tolerance tau) { return contains_ring(poly.vertices(), p, tau); }

std::pair<std::size_t, std::size_t> diameter_pair(std::span<const Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 2) throw InvalidArgument("diameter_pair needs at least 2 vertices");
  std::pair<std::size_t, std::size_t> best{0, 1};
  double best_d2 = -1.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Point d = vertices[b] - vertices[a];
      const double d2 = dot(d, d);
      if (d2 > best_d2) {
        best_d2 = d2;
        best = {a, b};
      }
    }
  }
  return best;
}

std::pair<std::size_t, std::size_t> diameter_pair(const ParamPolygon& poly) { return diameter_pair(poly.vertices()); }

ChordFrame::ChordFrame(Point a, Point b) : origin(a), length(distance(a, b)) {
  if (!(length > 0.0)) throw InvalidArgument("chord frame needs distinct points");
  y_axis = (b - a) * (1.0 / length);
  x_axis = {y_axis.y, -y_axis.x};
}

namespace {

bool side_on_chain(std::size_t side, std::size_t a, std::size_t b, std::size_t n) {
  return (side + n - a) % n < (b + n - a) % n;
}

}  // namespace

double midline_height(const ParamPolygon& poly, const ChordFrame& frame, Tolerance tau) {
  const double t = tau.value();
  const double step = (std::sqrt(5.0) - 1.0) / 2.0;
  double h = frame.length / 2.0;
  const std::size_t n = poly.size();
  for (int k = 1; k <= 64; ++k) {
    bool collinear = false;
    for (std::size_t i = 0; i < n && !collinear; ++i) {
      const double ya = frame.to_local(poly.vertex(i)).y;
      const double yb = frame.to_local(poly.vertex(poly.next(i))).y;
      collinear = std::abs(ya - h) <= t && std::abs(yb - h) <= t;
    }
    if (!collinear) return h;
    h = frame.length / 2.0 + std::max(t, 1e-12 * frame.length) * step * k;
  }
  return h;
}

std::vector<MidlineCrossing> midline_crossings(const ParamPolygon& poly, const ChordFrame& frame, double h,
                                               std::size_t a, std::size_t b) {
  const std::size_t n = poly.size();
  std::vector<MidlineCrossing> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = frame.to_local(poly.vertex(i));
    const Point q = frame.to_local(poly.vertex(poly.next(i)));
    if ((p.y > h) == (q.y > h)) continue;
    const double x = p.x + (h - p.y) * (q.x - p.x) / (q.y - p.y);
    out.push_back({x, i, side_on_chain(i, a, b, n)});
  }
  std::sort(out.begin(), out.end(), [](const MidlineCrossing& l, const MidlineCrossing& r) {
    return l.x < r.x || (l.x == r.x && l.side < r.side);
  });
  return out;
}

ChainPair split_chains(const SimplePolygon& poly, std::size_t a, std::size_t b) {
  const std::size_t n = poly.size();
  if (a >= n || b >= n) throw InvalidArgument("split_chains: index out of range");
  if (a == b) throw InvalidArgument("split_chains: endpoints must differ");
  std::vector<std::size_t> ab;
  std::vector<std::size_t> ba;
  for (std::size_t k = a;; k = (k + 1) % n) {
    ab.push_back(k);
    if (k == b) break;
  }
  for (std::size_t k = b;; k = (k + 1) % n) {
    ba.push_back(k);
    if (k == a) break;
  }
  const ChordFrame frame(poly.vertex(a), poly.vertex(b));
  const double h = midline_height(poly.polygon(), frame, Tolerance{});
  const auto crossings = midline_crossings(poly.polygon(), frame, h, a, b);
  const bool ab_is_left = crossings.empty() || crossings.front().on_chain_ab;

  ChainPair out;
  out.left = ab_is_left ? std::move(ab) : std::move(ba);
  out.right = ab_is_left ? std::move(ba) : std::move(ab);
  for (std::size_t k : out.left) out.left_points.push_back(poly.vertex(k));
  for (std::size_t k : out.right) out.right_points.push_back(poly.vertex(k));
  return out;
}

}  // namespace jordan
