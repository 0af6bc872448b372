#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "jordan/geom.hpp"

namespace jordan {

/// One coordinate of a Fourier curve:
///   a0 + sum_k a[k-1] cos(2 pi k t) + b[k-1] sin(2 pi k t).
struct FourierSeries {
  double a0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;
};

class FourierCurve {
 public:
  FourierCurve(FourierSeries x, FourierSeries y);

  Point evaluate(double t) const;
  const FourierSeries& x() const { return x_; }
  const FourierSeries& y() const { return y_; }
  std::size_t harmonics() const { return harmonics_; }

 private:
  FourierSeries x_;
  FourierSeries y_;
  std::size_t harmonics_ = 0;
};

class EllipseCurve {
 public:
  EllipseCurve(double a, double b, Point center = {}, double rotation = 0.0);

  Point evaluate(double t) const;
  double a() const { return a_; }
  double b() const { return b_; }
  Point center() const { return center_; }
  double rotation() const { return rotation_; }

 private:
  double a_;
  double b_;
  Point center_;
  double rotation_;
  double cos_rot_;
  double sin_rot_;
};

/// Closed polyline, linear between knots. Knots default to normalized
/// cumulative arclength starting at 0; explicit knots must be strictly
/// increasing in [0,1).
class PolylineCurve {
 public:
  explicit PolylineCurve(std::vector<Point> points);
  PolylineCurve(std::vector<Point> points, std::vector<double> knots);

  Point evaluate(double t) const;
  const std::vector<Point>& points() const { return points_; }
  const std::vector<double>& knots() const { return knots_; }
  bool arclength_knots() const { return arclength_; }

 private:
  std::vector<Point> points_;
  std::vector<double> knots_;
  bool arclength_ = true;
};

/// A continuous 1-periodic map t -> K(t), assumed injective modulo 1.
class ClosedCurve {
 public:
  using Form = std::variant<FourierCurve, EllipseCurve, PolylineCurve>;

  ClosedCurve(FourierCurve c) : form_(std::move(c)) {}
  ClosedCurve(EllipseCurve c) : form_(std::move(c)) {}
  ClosedCurve(PolylineCurve c) : form_(std::move(c)) {}

  static ClosedCurve unit_circle();

  Point evaluate(double t) const;
  Point operator()(double t) const { return evaluate(t); }
  const Form& form() const { return form_; }

 private:
  Form form_;
};

/// Vertex list with strictly increasing parameters in [0,1); side i joins
/// vertex i to vertex (i+1) mod n.
class ParamPolygon {
 public:
  ParamPolygon(std::vector<Point> vertices, std::vector<double> params);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<double>& params() const { return params_; }
  Point vertex(std::size_t i) const { return vertices_[i]; }
  double param(std::size_t i) const { return params_[i]; }
  std::size_t next(std::size_t i) const { return i + 1 == size() ? 0 : i + 1; }
  std::size_t prev(std::size_t i) const { return i == 0 ? size() - 1 : i - 1; }
  /// Throws InvalidArgument if the side has zero length.
  Segment side(std::size_t i) const { return Segment(vertices_[i], vertices_[next(i)]); }
  double side_length(std::size_t i) const { return distance(vertices_[i], vertices_[next(i)]); }

 private:
  std::vector<Point> vertices_;
  std::vector<double> params_;
};

enum class SpacingRule {
  Strict,     // t_n - t_1 > 1/2 and every gap < 1/2
  AllowHalf,  // closure of the above: span >= 1/2, gaps <= 1/2
};

/// The parameter-spacing requirement on approximating polygons.
bool satisfies_spacing(const ParamPolygon& poly, SpacingRule rule = SpacingRule::Strict);

/// Uniform sampling t_i = i/n for i = 0..n-1.
ParamPolygon sample(const ClosedCurve& curve, std::size_t n);

/// Longest side, closing side included.
double mesh(const ParamPolygon& poly);

struct RefineOptions {
  std::size_t max_doublings = 24;
};

/// sample(curve, n0 * 2^k) for the smallest k with mesh <= eps_target.
ParamPolygon refine_until(const ClosedCurve& curve, double eps_target, std::size_t n0,
                          RefineOptions options = {});

/// 2 * max_i of max |K(t) - K(t_i)| over m equispaced t in each parameter
/// interval [t_i, t_{i+1}] (the closing interval wraps to t_1 + 1).
double band_radius(const ClosedCurve& curve, const ParamPolygon& poly, std::size_t m = 16);

/// Brute-force min |K(t) - K(t')| over an m-point grid, restricted to pairs
/// whose circular parameter distance is at least s.
double injectivity_gap(const ClosedCurve& curve, double s, std::size_t m);

/// Throws ConstructionFailed unless eps < gap / 2.
void validate_band_radius(double eps, double gap);

/// Circular distance between two parameters on the unit circle R/Z.
double circular_distance(double t, double u);

}  // namespace jordan
