#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "jordan/curve.hpp"
#include "jordan/geom.hpp"
#include "jordan/regions.hpp"

namespace jordan {

/// Layers drawn bottom to top; absent layers are skipped.
struct SvgScene {
  std::optional<ClosedCurve> curve;
  std::size_t curve_samples = 4096;
  std::optional<ParamPolygon> polygon;
  double eps = 0.0;  // band drawn around the polygon when > 0
  std::optional<WitnessReport> witness;
  std::optional<ParamPolygon> separating;
  std::optional<PathPolyline> path;
};

/// y-up drawing; the viewBox is the curve's bounding box (else the
/// polygon's) grown by 10% on each side.
std::string render_svg(const SvgScene& scene);

}  // namespace jordan
