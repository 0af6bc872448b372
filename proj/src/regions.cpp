#include "jordan/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jordan/error.hpp"
#include "jordan/topology.hpp"

namespace jordan {

RegionLabel classify(const SimplePolygon& poly, double eps, Point p, Tolerance tau) {
  if (!(eps > 0.0)) throw InvalidArgument("classify needs eps > 0");
  if (distance_to(poly.polygon(), p) <= eps) return RegionLabel::BoundaryBand;
  return contains(poly, p, tau) == Location::Inside ? RegionLabel::Interior : RegionLabel::Exterior;
}

const char* to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::Interior:
      return "Interior";
    case RegionLabel::Exterior:
      return "Exterior";
    case RegionLabel::BoundaryBand:
      return "BoundaryBand";
  }
  return "?";
}

WitnessReport interior_witness(const SimplePolygon& poly, Tolerance tau) {
  const ParamPolygon& pg = poly.polygon();
  const auto [a, b] = diameter_pair(pg);
  const ChordFrame frame(pg.vertex(a), pg.vertex(b));
  const double h = midline_height(pg, frame, tau);
  const auto crossings = midline_crossings(pg, frame, h, a, b);
  if (crossings.empty()) throw ConstructionFailed("interior_witness: midline meets no side");
  const ChainPair chains = split_chains(poly, a, b);
  const bool left_is_ab = crossings.front().on_chain_ab;
  auto on_left = [&](const MidlineCrossing& c) { return c.on_chain_ab == left_is_ab; };
  auto world = [&](double x) { return frame.to_world({x, h}); };
  auto gap_inside = [&](const MidlineCrossing& l, const MidlineCrossing& r) {
    return l.x != r.x && contains(poly, world(0.5 * (l.x + r.x)), tau) == Location::Inside;
  };

  WitnessReport out;
  out.index_a = a;
  out.index_b = b;
  out.a = pg.vertex(a);
  out.b = pg.vertex(b);

  std::optional<std::pair<MidlineCrossing, MidlineCrossing>> cd;
  // Rightmost L crossing; every later crossing belongs to R.
  std::size_t last_l = crossings.size();
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    if (on_left(crossings[k])) last_l = k;
  }
  if (last_l + 1 < crossings.size() && gap_inside(crossings[last_l], crossings[last_l + 1])) {
    cd.emplace(crossings[last_l], crossings[last_l + 1]);
    out.variant = 0;
  }
  if (!cd) {
    // Mirror: leftmost R crossing and the L crossing just before it.
    for (std::size_t k = 1; k < crossings.size(); ++k) {
      if (!on_left(crossings[k])) {
        if (gap_inside(crossings[k - 1], crossings[k])) {
          cd.emplace(crossings[k - 1], crossings[k]);
          out.variant = 1;
        }
        break;
      }
    }
  }
  if (!cd) {
    for (std::size_t k = 0; k + 1 < crossings.size(); ++k) {
      const auto& l = crossings[k];
      const auto& r = crossings[k + 1];
      if (on_left(l) != on_left(r) && gap_inside(l, r)) {
        cd = on_left(l) ? std::make_pair(l, r) : std::make_pair(r, l);
        out.variant = 2;
        break;
      }
    }
  }
  if (!cd) throw ConstructionFailed("interior_witness: no interior gap between the chains along the midline");

  out.c = world(cd->first.x);
  out.d = world(cd->second.x);

  const auto& left = chains.left_points;
  const auto& right = chains.right_points;
  auto f = [&](Point x, double& dl, double& dr) {
    dl = distance_to_chain(left, x);
    dr = distance_to_chain(right, x);
    return dl - dr;
  };
  double lo = 0.0;
  double hi = 1.0;
  double dl = 0.0;
  double dr = 0.0;
  Point e = lerp(out.c, out.d, 0.5);
  int it = 0;
  for (; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    e = lerp(out.c, out.d, mid);
    const double fv = f(e, dl, dr);
    if (std::abs(fv) <= tau.value() * (1.0 + std::min(dl, dr))) break;
    if (fv < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.e = e;
  out.distance_l = dl;
  out.distance_r = dr;
  out.clearance = std::min(dl, dr);
  out.bisection_iterations = it;

  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  for (const Point& p : pg.vertices()) {
    const double x = frame.to_local(p).x;
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  const double pad = 0.1 * std::max(xmax - xmin, frame.length);
  out.gamma_start = world(xmin - pad);
  out.gamma_end = world(xmax + pad);
  return out;
}

std::optional<Point> check_separation(const SimplePolygon& poly, double eps, const PathPolyline& arc, Tolerance tau) {
  if (arc.points.size() < 2) throw InvalidArgument("check_separation: arc needs at least 2 points");
  if (classify(poly, eps, arc.points.front(), tau) != RegionLabel::Interior ||
      classify(poly, eps, arc.points.back(), tau) != RegionLabel::Exterior) {
    throw InvalidArgument("check_separation: arc must run from an Interior to an Exterior point");
  }
  const ParamPolygon& pg = poly.polygon();
  for (std::size_t k = 0; k + 1 < arc.points.size(); ++k) {
    const Point p = arc.points[k];
    const Point q = arc.points[k + 1];
    if (p == q) continue;
    std::optional<Point> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pg.size(); ++i) {
      const SegmentIntersection hit = segment_intersection(p, q, pg.vertex(i), pg.vertex(pg.next(i)), tau);
      if (hit.empty()) continue;
      const double d = distance(p, hit.first);
      if (d < best_d) {
        best_d = d;
        best = hit.first;
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace jordan
