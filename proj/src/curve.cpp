#include "jordan/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "jordan/error.hpp"

namespace jordan {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double frac(double t) {
  double u = t - std::floor(t);
  // t slightly below an integer can round up to exactly 1.
  return u >= 1.0 ? 0.0 : u;
}

void check_series(const FourierSeries& s) {
  if (!std::isfinite(s.a0)) throw InvalidArgument("non-finite Fourier coefficient");
  for (double v : s.a) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite Fourier coefficient");
  }
  for (double v : s.b) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite Fourier coefficient");
  }
}

double coefficient(const std::vector<double>& c, std::size_t k) { return k < c.size() ? c[k] : 0.0; }

}  // namespace

FourierCurve::FourierCurve(FourierSeries x, FourierSeries y) : x_(std::move(x)), y_(std::move(y)) {
  check_series(x_);
  check_series(y_);
  harmonics_ = std::max({x_.a.size(), x_.b.size(), y_.a.size(), y_.b.size()});
}

Point FourierCurve::evaluate(double t) const {
  const double theta = kTwoPi * frac(t);
  const double c1 = std::cos(theta);
  const double s1 = std::sin(theta);
  double ck = c1;
  double sk = s1;
  Point p{x_.a0, y_.a0};
  for (std::size_t k = 0; k < harmonics_; ++k) {
    p.x += coefficient(x_.a, k) * ck + coefficient(x_.b, k) * sk;
    p.y += coefficient(y_.a, k) * ck + coefficient(y_.b, k) * sk;
    const double next_c = ck * c1 - sk * s1;
    sk = sk * c1 + ck * s1;
    ck = next_c;
  }
  return p;
}

EllipseCurve::EllipseCurve(double a, double b, Point center, double rotation)
    : a_(a), b_(b), center_(center), rotation_(rotation), cos_rot_(std::cos(rotation)), sin_rot_(std::sin(rotation)) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("ellipse semi-axes must be positive and finite");
  }
  if (!is_finite(center) || !std::isfinite(rotation)) {
    throw InvalidArgument("ellipse center and rotation must be finite");
  }
}

Point EllipseCurve::evaluate(double t) const {
  const double theta = kTwoPi * frac(t);
  const double u = a_ * std::cos(theta);
  const double v = b_ * std::sin(theta);
  return {center_.x + cos_rot_ * u - sin_rot_ * v, center_.y + sin_rot_ * u + cos_rot_ * v};
}

PolylineCurve::PolylineCurve(std::vector<Point> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  if (n < 3) throw InvalidArgument("polyline curve needs at least 3 points");
  std::vector<double> cumulative(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_finite(points_[i])) throw InvalidArgument("non-finite polyline point");
    const double len = distance(points_[i], points_[(i + 1) % n]);
    if (len == 0.0) throw InvalidArgument("polyline curve has repeated consecutive points");
    cumulative[i + 1] = cumulative[i] + len;
  }
  knots_.resize(n);
  for (std::size_t i = 0; i < n; ++i) knots_[i] = cumulative[i] / cumulative[n];
}

PolylineCurve::PolylineCurve(std::vector<Point> points, std::vector<double> knots)
    : points_(std::move(points)), knots_(std::move(knots)), arclength_(false) {
  const std::size_t n = points_.size();
  if (n < 3) throw InvalidArgument("polyline curve needs at least 3 points");
  if (knots_.size() != n) throw InvalidArgument("polyline knots and points differ in length");
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_finite(points_[i])) throw InvalidArgument("non-finite polyline point");
    if (!(knots_[i] >= 0.0 && knots_[i] < 1.0)) throw InvalidArgument("polyline knots must lie in [0,1)");
    if (i > 0 && !(knots_[i] > knots_[i - 1])) throw InvalidArgument("polyline knots must increase strictly");
  }
}

Point PolylineCurve::evaluate(double t) const {
  const std::size_t n = points_.size();
  double u = frac(t);
  if (u < knots_.front()) u += 1.0;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
  const std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
  const double lo = knots_[i];
  const double hi = i + 1 < n ? knots_[i + 1] : knots_.front() + 1.0;
  const double s = std::clamp((u - lo) / (hi - lo), 0.0, 1.0);
  return lerp(points_[i], points_[(i + 1) % n], s);
}

ClosedCurve ClosedCurve::unit_circle() {
  return FourierCurve(FourierSeries{0.0, {1.0}, {}}, FourierSeries{0.0, {}, {1.0}});
}

Point ClosedCurve::evaluate(double t) const {
  return std::visit([t](const auto& c) { return c.evaluate(t); }, form_);
}

ParamPolygon::ParamPolygon(std::vector<Point> vertices, std::vector<double> params)
    : vertices_(std::move(vertices)), params_(std::move(params)) {
  if (vertices_.size() < 3) throw InvalidArgument("polygon needs at least 3 vertices");
  if (vertices_.size() != params_.size()) throw InvalidArgument("vertex and parameter counts differ");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_finite(vertices_[i])) throw InvalidArgument("non-finite vertex");
    if (!(params_[i] >= 0.0 && params_[i] < 1.0)) throw InvalidArgument("parameters must lie in [0,1)");
    if (i > 0 && !(params_[i] > params_[i - 1])) throw InvalidArgument("parameters must increase strictly");
  }
}

bool satisfies_spacing(const ParamPolygon& poly, SpacingRule rule) {
  const auto& t = poly.params();
  const double span = t.back() - t.front();
  const bool strict = rule == SpacingRule::Strict;
  if (strict ? !(span > 0.5) : !(span >= 0.5)) return false;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const double gap = t[i + 1] - t[i];
    if (strict ? !(gap < 0.5) : !(gap <= 0.5)) return false;
  }
  return true;
}

ParamPolygon sample(const ClosedCurve& curve, std::size_t n) {
  if (n < 3) throw InvalidArgument("sample needs n >= 3");
  std::vector<Point> vertices(n);
  std::vector<double> params(n);
  for (std::size_t i = 0; i < n; ++i) {
    params[i] = static_cast<double>(i) / static_cast<double>(n);
    vertices[i] = curve.evaluate(params[i]);
  }
  return ParamPolygon(std::move(vertices), std::move(params));
}

double mesh(const ParamPolygon& poly) {
  double best = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) best = std::max(best, poly.side_length(i));
  return best;
}

ParamPolygon refine_until(const ClosedCurve& curve, double eps_target, std::size_t n0, RefineOptions options) {
  if (n0 < 3) throw InvalidArgument("refine_until needs n0 >= 3");
  if (!(eps_target > 0.0)) {
    throw ConstructionFailed("refine_until: mesh target " + std::to_string(eps_target) + " is unreachable");
  }
  std::size_t n = n0;
  for (std::size_t k = 0; k <= options.max_doublings; ++k, n *= 2) {
    double longest = 0.0;
    const Point first = curve.evaluate(0.0);
    Point prev = first;
    for (std::size_t i = 1; i < n && longest <= eps_target; ++i) {
      const Point p = curve.evaluate(static_cast<double>(i) / static_cast<double>(n));
      longest = std::max(longest, distance(prev, p));
      prev = p;
    }
    longest = std::max(longest, distance(prev, first));
    if (longest <= eps_target) return sample(curve, n);
  }
  throw ConstructionFailed("refine_until: mesh target " + std::to_string(eps_target) + " not reached after " +
                           std::to_string(options.max_doublings) + " doublings");
}

double band_radius(const ClosedCurve& curve, const ParamPolygon& poly, std::size_t m) {
  if (m < 2) throw InvalidArgument("band_radius needs m >= 2 sub-samples");
  const std::size_t n = poly.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = poly.param(i);
    const double hi = i + 1 < n ? poly.param(i + 1) : poly.param(0) + 1.0;
    const Point base = poly.vertex(i);
    for (std::size_t j = 1; j < m; ++j) {
      const double t = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(m - 1);
      worst = std::max(worst, distance(curve.evaluate(t), base));
    }
  }
  return 2.0 * worst;
}

double injectivity_gap(const ClosedCurve& curve, double s, std::size_t m) {
  if (!(s > 0.0 && s <= 0.5)) throw InvalidArgument("injectivity_gap needs 0 < s <= 1/2");
  if (m < 8) throw InvalidArgument("injectivity_gap needs m >= 8");
  std::vector<Point> pts(m);
  for (std::size_t i = 0; i < m; ++i) pts[i] = curve.evaluate(static_cast<double>(i) / static_cast<double>(m));
  // Smallest index offset whose circular distance reaches s.
  const auto min_offset = static_cast<std::size_t>(std::ceil(s * static_cast<double>(m) - 1e-9));
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + min_offset; j < m; ++j) {
      const std::size_t d = j - i;
      if (std::min(d, m - d) < min_offset) continue;
      best = std::min(best, distance(pts[i], pts[j]));
    }
  }
  return std::isfinite(best) ? best : 0.0;
}

void validate_band_radius(double eps, double gap) {
  if (!(eps < gap / 2.0)) {
    throw ConstructionFailed("band radius " + std::to_string(eps) + " does not resolve the curve (injectivity gap " +
                             std::to_string(gap) + ", need eps < gap/2)");
  }
}

double circular_distance(double t, double u) {
  const double d = std::abs(frac(t) - frac(u));
  return std::min(d, 1.0 - d);
}

}  // namespace jordan
