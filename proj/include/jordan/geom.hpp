#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace jordan {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
constexpr Point operator*(double s, Point a) { return {a.x * s, a.y * s}; }

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
constexpr Point lerp(Point a, Point b, double s) { return a + (b - a) * s; }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Slack used by incidence predicates, in the same length units as the
/// coordinates. Must stay far below any band radius it is combined with.
class Tolerance {
 public:
  static constexpr double kDefault = 1e-9;

  constexpr Tolerance() = default;
  explicit Tolerance(double tau);

  constexpr double value() const { return tau_; }

  /// Throws InvalidArgument unless tau <= eps / 100.
  void check_against_band(double eps) const;

 private:
  double tau_ = kDefault;
};

/// Closed segment with distinct endpoints.
class Segment {
 public:
  Segment(Point a, Point b);

  Point a() const { return a_; }
  Point b() const { return b_; }
  Point direction() const { return b_ - a_; }
  double length() const { return distance(a_, b_); }
  Point at(double s) const { return lerp(a_, b_, s); }

 private:
  Point a_;
  Point b_;
};

enum class Orientation { Left, Right, Collinear };

/// Sign of the signed area of pqr. Collinear when |area| <= tau * L^2 where
/// L is the largest pairwise distance of the three points.
Orientation orient(Point p, Point q, Point r, Tolerance tau);

struct SegmentIntersection {
  enum class Kind { Empty, Point, Overlap };

  Kind kind = Kind::Empty;
  Point first;   // intersection point, or start of the overlap (along s)
  Point second;  // end of the overlap; equals first for Kind::Point

  bool empty() const { return kind == Kind::Empty; }
  Segment overlap() const { return Segment(first, second); }
};

SegmentIntersection segment_intersection(const Segment& s, const Segment& u, Tolerance tau);

/// Raw-endpoint form used by hot loops; endpoints of each pair may coincide.
SegmentIntersection segment_intersection(Point sa, Point sb, Point ua, Point ub, Tolerance tau);

bool is_inner_point(Point p, const Segment& s, Tolerance tau);
bool is_inner_point(Point p, Point a, Point b, Tolerance tau);

/// Parameter in [0,1] of the point of segment ab nearest to p.
double closest_parameter(Point p, Point a, Point b);

double point_segment_distance(Point p, const Segment& s);
double point_segment_distance(Point p, Point a, Point b);

/// Distance between two closed segments (0 when they intersect).
double segment_segment_distance(Point sa, Point sb, Point ua, Point ub);

double signed_area(std::span<const Point> ring);

/// Ordered broken line; consecutive points are distinct.
struct PathPolyline {
  std::vector<Point> points;
};

/// Removes consecutive duplicates in place.
void dedupe_consecutive(PathPolyline& path);

}  // namespace jordan
