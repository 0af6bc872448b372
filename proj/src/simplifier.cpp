#include "jordan/simplifier.hpp"

#include <algorithm>
#include <string>

#include "jordan/error.hpp"

namespace jordan {

struct SimplifyAccess {
  static SimplePolygon make(ParamPolygon poly) {
    const double area = signed_area(poly.vertices());
    if (area == 0.0) throw ConstructionFailed("polygon has zero area");
    return SimplePolygon(std::move(poly), area > 0.0 ? PolygonOrientation::CCW : PolygonOrientation::CW);
  }
};

namespace {

struct Box {
  double x0, x1, y0, y1;
};

Box side_box(const ParamPolygon& poly, std::size_t i, double pad) {
  const Point a = poly.vertex(i);
  const Point b = poly.vertex(poly.next(i));
  return {std::min(a.x, b.x) - pad, std::max(a.x, b.x) + pad, std::min(a.y, b.y) - pad, std::max(a.y, b.y) + pad};
}

bool boxes_meet(const Box& a, const Box& b) {
  return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

bool sides_adjacent(std::size_t i, std::size_t j, std::size_t n) {
  return j == i + 1 || (i == 0 && j == n - 1);
}

std::optional<IllegalIntersection> test_pair(const ParamPolygon& poly, std::size_t i, std::size_t j, Tolerance tau) {
  const SegmentIntersection hit = segment_intersection(poly.vertex(i), poly.vertex(poly.next(i)), poly.vertex(j),
                                                       poly.vertex(poly.next(j)), tau);
  if (hit.empty()) return std::nullopt;
  IllegalIntersection x;
  x.kind = IntersectionKind::NonAdjacentCross;
  x.i = i;
  x.j = j;
  if (hit.kind == SegmentIntersection::Kind::Overlap) {
    x.overlap = hit.overlap();
    x.witness = lerp(hit.first, hit.second, 0.5);
  } else {
    x.witness = hit.first;
  }
  return x;
}

std::optional<IllegalIntersection> first_adjacent(const ParamPolygon& poly, Tolerance tau) {
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (auto w = adjacent_degeneracy(poly, k, tau)) {
      return IllegalIntersection{IntersectionKind::AdjacentDegenerate, k, poly.next(k), *w, std::nullopt};
    }
  }
  return std::nullopt;
}

std::optional<IllegalIntersection> naive_scan(const ParamPolygon& poly, Tolerance tau) {
  const std::size_t n = poly.size();
  std::vector<Box> boxes(n);
  for (std::size_t i = 0; i < n; ++i) boxes[i] = side_box(poly, i, tau.value());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (sides_adjacent(i, j, n) || !boxes_meet(boxes[i], boxes[j])) continue;
      if (auto x = test_pair(poly, i, j, tau)) return x;
    }
  }
  return std::nullopt;
}

std::optional<IllegalIntersection> sweep_scan(const ParamPolygon& poly, Tolerance tau) {
  const std::size_t n = poly.size();
  std::vector<Box> boxes(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    boxes[i] = side_box(poly, i, tau.value());
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return boxes[a].x0 < boxes[b].x0 || (boxes[a].x0 == boxes[b].x0 && a < b);
  });
  std::vector<std::pair<std::size_t, std::size_t>> hits;
  std::vector<std::size_t> active;
  for (std::size_t s : order) {
    const Box& bs = boxes[s];
    std::size_t keep = 0;
    for (std::size_t a : active) {
      if (boxes[a].x1 < bs.x0) continue;
      active[keep++] = a;
      if (boxes[a].y0 > bs.y1 || bs.y0 > boxes[a].y1) continue;
      const std::size_t i = std::min(a, s);
      const std::size_t j = std::max(a, s);
      if (j < i + 2 || sides_adjacent(i, j, n)) continue;
      hits.emplace_back(i, j);
    }
    active.resize(keep);
    active.push_back(s);
  }
  // Bounding-box candidates are tested in lexicographic order so the reported
  // witness is computed exactly as the naive scan computes it.
  std::sort(hits.begin(), hits.end());
  for (const auto& [i, j] : hits) {
    if (auto x = test_pair(poly, i, j, tau)) return x;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Point> adjacent_degeneracy(const ParamPolygon& poly, std::size_t k, Tolerance tau) {
  const std::size_t n = poly.size();
  const Point a = poly.vertex(k % n);
  const Point b = poly.vertex((k + 1) % n);
  const Point c = poly.vertex((k + 2) % n);
  const double t = tau.value();
  if (distance(a, b) <= t) return b;
  if (is_inner_point(a, b, c, tau)) return a;
  if (is_inner_point(c, a, b, tau)) return c;
  if (distance(a, c) <= t) return c;
  return std::nullopt;
}

std::optional<IllegalIntersection> find_illegal_intersection(const ParamPolygon& poly, Tolerance tau,
                                                             ScanMethod method) {
  if (auto x = first_adjacent(poly, tau)) return x;
  return method == ScanMethod::Naive ? naive_scan(poly, tau) : sweep_scan(poly, tau);
}

ParamPolygon fix_adjacent(const ParamPolygon& poly, std::size_t k, Tolerance tau) {
  const std::size_t n = poly.size();
  if (k >= n) throw InvalidArgument("fix_adjacent: index out of range");
  if (!adjacent_degeneracy(poly, k, tau)) {
    throw InvalidArgument("fix_adjacent: sides " + std::to_string(k) + " and " + std::to_string(poly.next(k)) +
                          " do not overlap beyond their common vertex");
  }
  if (n <= 3) throw DegenerateCurve("fix_adjacent: reduction would leave fewer than 3 vertices");
  const std::size_t drop = poly.next(k);
  std::vector<Point> v;
  std::vector<double> t;
  v.reserve(n - 1);
  t.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == drop) continue;
    v.push_back(poly.vertex(i));
    t.push_back(poly.param(i));
  }
  return ParamPolygon(std::move(v), std::move(t));
}

namespace {

struct CutOutcome {
  std::vector<std::size_t> keep;  // original indices, ascending
  bool kept_loop = false;
  double chord = 0.0;
};

CutOutcome plan_cut(const ParamPolygon& poly, const IllegalIntersection& x) {
  const std::size_t n = poly.size();
  if (x.kind != IntersectionKind::NonAdjacentCross) throw InvalidArgument("cut_loop: needs a non-adjacent crossing");
  if (!(x.i + 1 < x.j) || x.j >= n || (x.i == 0 && x.j == n - 1)) {
    throw InvalidArgument("cut_loop: sides " + std::to_string(x.i) + " and " + std::to_string(x.j) +
                          " are adjacent or out of range");
  }
  const std::size_t i = x.i;
  const std::size_t j = x.j;
  const std::size_t i1 = i + 1;
  const std::size_t j1 = j + 1;  // may equal n, meaning vertex 0
  const double d_outer = distance(poly.vertex(i), poly.vertex(j));
  const double d_inner = distance(poly.vertex(i1), poly.vertex(j1 % n));

  CutOutcome out;
  // Chord joins lo..hi (hi may be n, i.e. vertex 0 one period later).
  const bool first_pair = d_outer <= d_inner;
  const std::size_t lo = first_pair ? i : i1;
  const std::size_t hi = first_pair ? j : j1;
  out.chord = first_pair ? d_outer : d_inner;
  const double t_hi = hi == n ? poly.param(0) + 1.0 : poly.param(hi);
  const double span = t_hi - poly.param(lo);
  if (span <= 0.5) {
    // Outer polygon: 0..lo, hi..n-1.
    for (std::size_t k = 0; k <= lo; ++k) out.keep.push_back(k);
    for (std::size_t k = hi; k < n; ++k) out.keep.push_back(k);
  } else {
    out.kept_loop = true;
    if (hi == n) out.keep.push_back(0);
    for (std::size_t k = lo; k <= std::min(hi, n - 1); ++k) out.keep.push_back(k);
  }
  return out;
}

ParamPolygon gather(const ParamPolygon& poly, const std::vector<std::size_t>& keep) {
  if (keep.size() < 3) throw DegenerateCurve("cut_loop: reduction would leave fewer than 3 vertices");
  std::vector<Point> v;
  std::vector<double> t;
  v.reserve(keep.size());
  t.reserve(keep.size());
  for (std::size_t k : keep) {
    v.push_back(poly.vertex(k));
    t.push_back(poly.param(k));
  }
  return ParamPolygon(std::move(v), std::move(t));
}

}  // namespace

ParamPolygon cut_loop(const ParamPolygon& poly, const IllegalIntersection& x) {
  return gather(poly, plan_cut(poly, x).keep);
}

SimplePolygon SimplePolygon::certify(ParamPolygon poly, Tolerance tau, ScanMethod method) {
  if (auto x = find_illegal_intersection(poly, tau, method)) {
    throw ConstructionFailed("polygon is not simple: illegal intersection of sides " + std::to_string(x->i) +
                             " and " + std::to_string(x->j));
  }
  return SimplifyAccess::make(std::move(poly));
}

SimplifyResult simplify(const ParamPolygon& poly, Tolerance tau, const SimplifyOptions& options) {
  if (!satisfies_spacing(poly, SpacingRule::Strict)) {
    throw InvalidArgument("simplify: input violates the parameter spacing condition");
  }
  std::vector<ReductionStep> steps;
  ParamPolygon current = poly;
  double current_mesh = mesh(current);
  while (auto x = find_illegal_intersection(current, tau, options.method)) {
    ReductionStep step{x->kind, x->i, x->j, current.size(), 0, current_mesh, 0.0, 0.0, false};
    ParamPolygon next = current;
    if (x->kind == IntersectionKind::AdjacentDegenerate) {
      if (current.size() <= 3) throw DegenerateCurve("simplify: reduction reached fewer than 3 vertices");
      next = fix_adjacent(current, x->i, tau);
      const std::size_t n = current.size();
      step.new_side_length = distance(current.vertex(x->i), current.vertex((x->i + 2) % n));
    } else {
      const CutOutcome plan = plan_cut(current, *x);
      next = gather(current, plan.keep);
      step.kept_loop = plan.kept_loop;
      step.new_side_length = plan.chord;
    }
    step.vertices_after = next.size();
    step.mesh_after = mesh(next);
    if (!satisfies_spacing(next, SpacingRule::AllowHalf)) {
      throw ConstructionFailed("simplify: reduction step " + std::to_string(steps.size()) +
                               " broke the parameter spacing condition");
    }
    current = std::move(next);
    current_mesh = step.mesh_after;
    steps.push_back(step);
    if (options.on_step) options.on_step(step, current);
  }
  return SimplifyResult{SimplifyAccess::make(std::move(current)), std::move(steps)};
}

}  // namespace jordan
