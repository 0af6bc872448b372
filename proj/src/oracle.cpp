#include "jordan/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include "jordan/error.hpp"

namespace jordan::oracle {

namespace {

double seg_dist(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  double s = len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  const Point f = a + d * s;
  return std::hypot(p.x - f.x, p.y - f.y);
}

struct PairHit {
  bool hit = false;
  bool overlap = false;
  Point witness;
};

// Segments meet when their distance is at most tau; a proper crossing is
// solved parametrically, otherwise the contacts are endpoints near the
// other segment.
PairHit pair_hit(Point a, Point b, Point c, Point d, double tau) {
  const Point r = b - a;
  const Point s = d - c;
  const double den = r.x * s.y - r.y * s.x;
  if (den != 0.0) {
    const Point w = c - a;
    const double t = (w.x * s.y - w.y * s.x) / den;
    const double u = (w.x * r.y - w.y * r.x) / den;
    if (t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0) {
      const Point x = a + r * t;
      // Only a crossing away from every endpoint is a proper one.
      if (seg_dist(a, c, d) > tau && seg_dist(b, c, d) > tau && seg_dist(c, a, b) > tau && seg_dist(d, a, b) > tau) {
        return {true, false, x};
      }
    }
  }
  std::vector<Point> contacts;
  if (seg_dist(a, c, d) <= tau) contacts.push_back(a);
  if (seg_dist(b, c, d) <= tau) contacts.push_back(b);
  if (seg_dist(c, a, b) <= tau) contacts.push_back(c);
  if (seg_dist(d, a, b) <= tau) contacts.push_back(d);
  if (contacts.empty()) return {};
  const double len2 = dot(r, r);
  auto along = [&](Point p) { return len2 > 0.0 ? dot(p - a, r) / len2 : 0.0; };
  const auto [lo, hi] = std::minmax_element(contacts.begin(), contacts.end(),
                                            [&](Point l, Point q) { return along(l) < along(q); });
  const Point p = *lo;
  const Point q = *hi;
  if (std::hypot(p.x - q.x, p.y - q.y) > tau) return {true, true, (p + q) * 0.5};
  return {true, false, p};
}

bool inner(Point p, Point a, Point b, double tau) {
  return seg_dist(p, a, b) <= tau && std::hypot(p.x - a.x, p.y - a.y) > tau && std::hypot(p.x - b.x, p.y - b.y) > tau;
}

}  // namespace

int winding_number(const ParamPolygon& poly, Point p, Tolerance tau) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (seg_dist(p, poly.vertex(i), poly.vertex((i + 1) % n)) <= tau.value()) {
      throw InvalidArgument("winding_number: point lies on the boundary");
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point u = poly.vertex(i) - p;
    const Point v = poly.vertex((i + 1) % n) - p;
    total += std::atan2(cross(u, v), dot(u, v));
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

GridSpec make_grid(const ParamPolygon& poly, double h) {
  Point lo = poly.vertex(0);
  Point hi = lo;
  for (const Point& p : poly.vertices()) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  return {h, {lo.x - 2.0 * h, lo.y - 2.0 * h}, {hi.x + 2.0 * h, hi.y + 2.0 * h}};
}

std::size_t grid_columns(const GridSpec& g) { return static_cast<std::size_t>(std::ceil((g.max.x - g.min.x) / g.h)); }
std::size_t grid_rows(const GridSpec& g) { return static_cast<std::size_t>(std::ceil((g.max.y - g.min.y) / g.h)); }

std::vector<std::uint8_t> free_cells(const SimplePolygon& poly, double eps, const GridSpec& g, bool exhaustive) {
  const ParamPolygon& pg = poly.polygon();
  const std::size_t n = pg.size();
  const std::size_t nx = grid_columns(g);
  const std::size_t ny = grid_rows(g);
  auto center = [&](std::size_t i, std::size_t j) {
    return Point{g.min.x + (static_cast<double>(i) + 0.5) * g.h, g.min.y + (static_cast<double>(j) + 0.5) * g.h};
  };
  std::vector<std::uint8_t> free(nx * ny, 0);

  // Inside: parity of crossings to the left along each row of centers.
  std::vector<double> xs;
  for (std::size_t j = 0; j < ny; ++j) {
    const double y = center(0, j).y;
    xs.clear();
    for (std::size_t k = 0; k < n; ++k) {
      const Point p = pg.vertex(k);
      const Point q = pg.vertex((k + 1) % n);
      if ((p.y > y) == (q.y > y)) continue;
      xs.push_back(p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y));
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i < nx; ++i) {
      const double x = center(i, j).x;
      const auto left = std::lower_bound(xs.begin(), xs.end(), x) - xs.begin();
      if (left % 2 == 1) free[j * nx + i] = 1;
    }
  }

  if (exhaustive) {
    for (std::size_t j = 0; j < ny; ++j) {
      for (std::size_t i = 0; i < nx; ++i) {
        if (!free[j * nx + i]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (seg_dist(center(i, j), pg.vertex(k), pg.vertex((k + 1) % n)) <= eps) {
            free[j * nx + i] = 0;
            break;
          }
        }
      }
    }
    return free;
  }
  auto clamp_index = [](double v, std::size_t count) -> std::size_t {
    if (!(v > 0.0)) return 0;
    return std::min(count - 1, static_cast<std::size_t>(v));
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Point a = pg.vertex(k);
    const Point b = pg.vertex((k + 1) % n);
    const std::size_t i0 = clamp_index((std::min(a.x, b.x) - eps - g.min.x) / g.h - 1.0, nx);
    const std::size_t i1 = clamp_index((std::max(a.x, b.x) + eps - g.min.x) / g.h + 1.0, nx);
    const std::size_t j0 = clamp_index((std::min(a.y, b.y) - eps - g.min.y) / g.h - 1.0, ny);
    const std::size_t j1 = clamp_index((std::max(a.y, b.y) + eps - g.min.y) / g.h + 1.0, ny);
    for (std::size_t j = j0; j <= j1; ++j) {
      for (std::size_t i = i0; i <= i1; ++i) {
        if (free[j * nx + i] && seg_dist(center(i, j), a, b) <= eps) free[j * nx + i] = 0;
      }
    }
  }
  return free;
}

std::optional<PathPolyline> grid_path(const SimplePolygon& poly, double eps, Point a, Point b, const GridSpec& g) {
  if (!(g.h > 0.0) || !(eps > 0.0) || g.h > eps / 4.0) throw InvalidArgument("grid_path needs 0 < h <= eps/4");
  const GridSpec need = make_grid(poly.polygon(), g.h);
  const double slack = 1e-12 * (1.0 + std::abs(g.h));
  if (g.min.x > need.min.x + slack || g.min.y > need.min.y + slack || g.max.x < need.max.x - slack ||
      g.max.y < need.max.y - slack) {
    throw InvalidArgument("grid_path: box must contain the polygon with a 2h margin");
  }
  if (a == b) return PathPolyline{{a}};
  const std::size_t nx = grid_columns(g);
  const std::size_t ny = grid_rows(g);
  const auto free = free_cells(poly, eps, g);
  auto cell_of = [&](Point p) -> std::optional<std::size_t> {
    const double fx = std::floor((p.x - g.min.x) / g.h);
    const double fy = std::floor((p.y - g.min.y) / g.h);
    if (fx < 0 || fy < 0 || fx >= static_cast<double>(nx) || fy >= static_cast<double>(ny)) return std::nullopt;
    const std::size_t c = static_cast<std::size_t>(fy) * nx + static_cast<std::size_t>(fx);
    if (!free[c]) return std::nullopt;
    return c;
  };
  const auto ca = cell_of(a);
  const auto cb = cell_of(b);
  if (!ca || !cb) return std::nullopt;

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(nx * ny, kNone);
  std::deque<std::size_t> queue{*ca};
  parent[*ca] = *ca;
  while (!queue.empty() && parent[*cb] == kNone) {
    const std::size_t c = queue.front();
    queue.pop_front();
    const std::size_t i = c % nx;
    const std::size_t j = c / nx;
    const std::size_t nb[4] = {i > 0 ? c - 1 : kNone, i + 1 < nx ? c + 1 : kNone, j > 0 ? c - nx : kNone,
                               j + 1 < ny ? c + nx : kNone};
    for (std::size_t d : nb) {
      if (d == kNone || !free[d] || parent[d] != kNone) continue;
      parent[d] = c;
      queue.push_back(d);
    }
  }
  if (parent[*cb] == kNone) return std::nullopt;
  std::vector<std::size_t> cells{*cb};
  while (cells.back() != *ca) cells.push_back(parent[cells.back()]);
  std::reverse(cells.begin(), cells.end());
  PathPolyline path;
  path.points.push_back(a);
  for (std::size_t c : cells) {
    path.points.push_back({g.min.x + (static_cast<double>(c % nx) + 0.5) * g.h,
                           g.min.y + (static_cast<double>(c / nx) + 0.5) * g.h});
  }
  path.points.push_back(b);
  dedupe_consecutive(path);
  return path;
}

std::vector<IllegalIntersection> naive_self_intersections(const ParamPolygon& poly, Tolerance tau) {
  const std::size_t n = poly.size();
  const double t = tau.value();
  std::vector<IllegalIntersection> out;
  for (std::size_t k = 0; k < n; ++k) {
    const Point a = poly.vertex(k);
    const Point b = poly.vertex((k + 1) % n);
    const Point c = poly.vertex((k + 2) % n);
    std::optional<Point> w;
    if (std::hypot(a.x - b.x, a.y - b.y) <= t) {
      w = b;
    } else if (inner(a, b, c, t)) {
      w = a;
    } else if (inner(c, a, b, t)) {
      w = c;
    } else if (std::hypot(a.x - c.x, a.y - c.y) <= t) {
      w = c;
    }
    if (w) out.push_back({IntersectionKind::AdjacentDegenerate, k, (k + 1) % n, *w, std::nullopt});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      const PairHit hit = pair_hit(poly.vertex(i), poly.vertex((i + 1) % n), poly.vertex(j), poly.vertex((j + 1) % n), t);
      if (!hit.hit) continue;
      IllegalIntersection x{IntersectionKind::NonAdjacentCross, i, j, hit.witness, std::nullopt};
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jordan::oracle
