#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "jordan/curve.hpp"
#include "jordan/geom.hpp"
#include "jordan/simplifier.hpp"

namespace testing {

using namespace jordan;

inline ParamPolygon uniform_params(std::vector<Point> v) {
  std::vector<double> t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = static_cast<double>(i) / static_cast<double>(v.size());
  return ParamPolygon(std::move(v), std::move(t));
}

// Counterclockwise square with corners at +-h.
inline ParamPolygon square(double h = 1.0) { return uniform_params({{-h, -h}, {h, -h}, {h, h}, {-h, h}}); }

inline ParamPolygon bowtie() {
  return ParamPolygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}, {0.0, 0.25, 0.5, 0.75});
}

// Reference distance from p to the closed polygon, side by side.
inline double brute_distance(const std::vector<Point>& ring, Point p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point a = ring[i];
    const Point d = ring[(i + 1) % ring.size()] - a;
    const double s = std::clamp(dot(p - a, d) / dot(d, d), 0.0, 1.0);
    best = std::min(best, norm(p - (a + d * s)));
  }
  return best;
}

// Limacon r = 0.5 + cos(theta): a curve with one inner loop.
inline ClosedCurve limacon() {
  return ClosedCurve(FourierCurve({0.5, {0.5, 0.5}, {0.0, 0.0}}, {0.0, {0.0, 0.0}, {0.5, 0.5}}));
}

// Circle plus a seventh harmonic: several small loops.
inline ClosedCurve epicycle() {
  return ClosedCurve(FourierCurve({0.0, {1.0, 0, 0, 0, 0, 0, 0.6}, {0, 0, 0, 0, 0, 0, 0}},
                                  {0.0, {0, 0, 0, 0, 0, 0, 0}, {1.0, 0, 0, 0, 0, 0, -0.6}}));
}

}  // namespace testing
