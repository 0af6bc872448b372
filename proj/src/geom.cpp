#include "jordan/geom.hpp"

#include <algorithm>
#include <array>

#include "jordan/error.hpp"

namespace jordan {

Tolerance::Tolerance(double tau) : tau_(tau) {
  if (!std::isfinite(tau) || tau < 0.0) {
    throw InvalidArgument("tolerance must be finite and nonnegative");
  }
}

void Tolerance::check_against_band(double eps) const {
  if (!(tau_ <= eps / 100.0)) {
    throw InvalidArgument("tolerance " + std::to_string(tau_) + " exceeds band radius / 100 (eps = " +
                          std::to_string(eps) + ")");
  }
}

Segment::Segment(Point a, Point b) : a_(a), b_(b) {
  if (!is_finite(a) || !is_finite(b)) {
    throw InvalidArgument("segment endpoints must be finite");
  }
  if (a == b) {
    throw InvalidArgument("zero-length segment");
  }
}

Orientation orient(Point p, Point q, Point r, Tolerance tau) {
  const double area = 0.5 * cross(q - p, r - p);
  const Point pq = q - p;
  const Point pr = r - p;
  const Point qr = r - q;
  const double scale = std::max({dot(pq, pq), dot(pr, pr), dot(qr, qr)});
  if (std::abs(area) <= tau.value() * scale) {
    return Orientation::Collinear;
  }
  return area > 0.0 ? Orientation::Left : Orientation::Right;
}

double closest_parameter(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) {
    return 0.0;
  }
  return std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
}

double point_segment_distance(Point p, Point a, Point b) {
  return distance(p, lerp(a, b, closest_parameter(p, a, b)));
}

double point_segment_distance(Point p, const Segment& s) { return point_segment_distance(p, s.a(), s.b()); }

namespace {

bool strictly_opposite(Orientation u, Orientation v) {
  return (u == Orientation::Left && v == Orientation::Right) || (u == Orientation::Right && v == Orientation::Left);
}

}  // namespace

SegmentIntersection segment_intersection(Point sa, Point sb, Point ua, Point ub, Tolerance tau) {
  SegmentIntersection out;
  const double t = tau.value();

  const Orientation o1 = orient(ua, ub, sa, tau);
  const Orientation o2 = orient(ua, ub, sb, tau);
  const Orientation o3 = orient(sa, sb, ua, tau);
  const Orientation o4 = orient(sa, sb, ub, tau);
  if (strictly_opposite(o1, o2) && strictly_opposite(o3, o4)) {
    const Point sd = sb - sa;
    const Point ud = ub - ua;
    const double s = std::clamp(cross(ua - sa, ud) / cross(sd, ud), 0.0, 1.0);
    out.kind = SegmentIntersection::Kind::Point;
    out.first = out.second = lerp(sa, sb, s);
    return out;
  }

  // Touching or collinear configurations: every common point set is spanned
  // by endpoints of one segment lying on the other.
  std::array<Point, 4> contacts{};
  std::size_t count = 0;
  if (point_segment_distance(sa, ua, ub) <= t) contacts[count++] = sa;
  if (point_segment_distance(sb, ua, ub) <= t) contacts[count++] = sb;
  if (point_segment_distance(ua, sa, sb) <= t) contacts[count++] = ua;
  if (point_segment_distance(ub, sa, sb) <= t) contacts[count++] = ub;
  if (count == 0) {
    return out;
  }

  std::size_t best_i = 0;
  std::size_t best_j = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) {
      const double d = distance(contacts[i], contacts[j]);
      if (d > best) {
        best = d;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best <= t) {
    out.kind = SegmentIntersection::Kind::Point;
    out.first = out.second = contacts[0];
    return out;
  }
  Point p = contacts[best_i];
  Point q = contacts[best_j];
  if (dot(q - p, sb - sa) < 0.0) {
    std::swap(p, q);
  }
  out.kind = SegmentIntersection::Kind::Overlap;
  out.first = p;
  out.second = q;
  return out;
}

SegmentIntersection segment_intersection(const Segment& s, const Segment& u, Tolerance tau) {
  return segment_intersection(s.a(), s.b(), u.a(), u.b(), tau);
}

bool is_inner_point(Point p, Point a, Point b, Tolerance tau) {
  const double t = tau.value();
  return point_segment_distance(p, a, b) <= t && distance(p, a) > t && distance(p, b) > t;
}

bool is_inner_point(Point p, const Segment& s, Tolerance tau) { return is_inner_point(p, s.a(), s.b(), tau); }

double segment_segment_distance(Point sa, Point sb, Point ua, Point ub) {
  const Point sd = sb - sa;
  const Point ud = ub - ua;
  const double denom = cross(sd, ud);
  if (denom != 0.0) {
    const double s = cross(ua - sa, ud) / denom;
    const double u = cross(ua - sa, sd) / denom;
    if (s >= 0.0 && s <= 1.0 && u >= 0.0 && u <= 1.0) {
      return 0.0;
    }
  }
  return std::min({point_segment_distance(sa, ua, ub), point_segment_distance(sb, ua, ub),
                   point_segment_distance(ua, sa, sb), point_segment_distance(ub, sa, sb)});
}

double signed_area(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  if (n < 3) {
    return 0.0;
  }
  double acc = 0.0;
  const Point origin = ring[0];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    acc += cross(ring[i] - origin, ring[i + 1] - origin);
  }
  return 0.5 * acc;
}

void dedupe_consecutive(PathPolyline& path) {
  auto last = std::unique(path.points.begin(), path.points.end());
  path.points.erase(last, path.points.end());
}

}  // namespace jordan
