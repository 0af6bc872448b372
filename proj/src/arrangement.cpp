#include "jordan/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "jordan/error.hpp"

namespace jordan {

namespace {

double angle_of(Point d) { return std::atan2(d.y, d.x); }

}  // namespace

Arrangement::Arrangement(std::span<const ArrangementSegment> segments, std::span<const Point> sites, Tolerance tau,
                         const KeepEdge& keep)
    : tau_(tau) {
  const double t = tau.value();
  PointSnapper table(t);
  for (const Point& s : sites) table.insert(s);
  const std::size_t site_count = table.points().size();

  const std::size_t m = segments.size();
  std::vector<std::vector<Point>> splits(m);
  std::vector<std::pair<Point, Point>> raw;
  raw.reserve(m);
  for (const auto& s : segments) {
    if (!is_finite(s.a) || !is_finite(s.b)) throw InvalidArgument("arrangement: non-finite segment");
    raw.emplace_back(s.a, s.b);
  }
  std::optional<SegmentGrid> grid;
  if (m > 0) grid.emplace(raw);
  if (grid) {
    for (std::size_t s = 0; s < m; ++s) {
      const Point a = raw[s].first;
      const Point b = raw[s].second;
      splits[s].push_back(a);
      splits[s].push_back(b);
      const Point lo{std::min(a.x, b.x) - t, std::min(a.y, b.y) - t};
      const Point hi{std::max(a.x, b.x) + t, std::max(a.y, b.y) + t};
      for (std::size_t u : grid->candidates(lo, hi)) {
        if (u <= s) continue;
        const SegmentIntersection hit = segment_intersection(a, b, raw[u].first, raw[u].second, tau);
        if (hit.empty()) continue;
        splits[s].push_back(hit.first);
        splits[u].push_back(hit.first);
        if (hit.kind == SegmentIntersection::Kind::Overlap) {
          splits[s].push_back(hit.second);
          splits[u].push_back(hit.second);
        }
      }
    }
  }

  // Sites that fall on a segment split it as well.
  if (grid) {
    for (std::size_t v = 0; v < site_count; ++v) {
      const Point p = table.points()[v];
      for (std::size_t s : grid->candidates({p.x - t, p.y - t}, {p.x + t, p.y + t})) {
        if (point_segment_distance(p, raw[s].first, raw[s].second) <= t) splits[s].push_back(p);
      }
    }
  }

  struct Edge {
    std::size_t u;
    std::size_t v;
    EdgeRole role;
  };
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t s = 0; s < m; ++s) {
    const Point a = raw[s].first;
    const Point d = raw[s].second - a;
    const double len2 = dot(d, d);
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(splits[s].size());
    for (const Point& p : splits[s]) {
      order.emplace_back(len2 > 0.0 ? dot(p - a, d) / len2 : 0.0, table.insert(p));
    }
    std::sort(order.begin(), order.end());
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const std::size_t u = order[k].second;
      const std::size_t v = order[k + 1].second;
      if (u == v) continue;
      const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
      if (!seen.insert(key).second) continue;
      if (keep && !keep(table.points()[u], table.points()[v], segments[s].role)) continue;
      edges.push_back({u, v, segments[s].role});
    }
  }
  positions_ = table.points();
  const std::size_t nv = positions_.size();
  site_.assign(nv, 0);
  std::fill(site_.begin(), site_.begin() + static_cast<std::ptrdiff_t>(site_count), 1);

  // Prune dangling edges.
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].u].push_back(e);
    incident[edges[e].v].push_back(e);
  }
  std::vector<std::size_t> degree(nv);
  std::vector<std::uint8_t> alive(edges.size(), 1);
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < nv; ++v) {
    degree[v] = incident[v].size();
    if (degree[v] == 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.back();
    queue.pop_back();
    if (degree[v] != 1) continue;
    for (std::size_t e : incident[v]) {
      if (!alive[e]) continue;
      alive[e] = 0;
      const std::size_t w = edges[e].u == v ? edges[e].v : edges[e].u;
      --degree[v];
      --degree[w];
      if (degree[w] == 1) queue.push_back(w);
    }
  }

  outgoing_.assign(nv, {});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!alive[e]) continue;
    const std::size_t h = origin_.size();
    origin_.push_back(edges[e].u);
    origin_.push_back(edges[e].v);
    role_.push_back(edges[e].role);
    outgoing_[edges[e].u].push_back(h);
    outgoing_[edges[e].v].push_back(h + 1);
  }
  for (std::size_t v = 0; v < nv; ++v) {
    auto& out = outgoing_[v];
    std::sort(out.begin(), out.end(), [&](std::size_t l, std::size_t r) {
      return angle_of(positions_[target(l)] - positions_[v]) < angle_of(positions_[target(r)] - positions_[v]);
    });
  }
  // Position of each half-edge in its origin's rotation.
  std::vector<std::size_t> slot(origin_.size());
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t k = 0; k < outgoing_[v].size(); ++k) slot[outgoing_[v][k]] = k;
  }
  next_.assign(origin_.size(), 0);
  for (std::size_t h = 0; h < origin_.size(); ++h) {
    const std::size_t tw = h ^ 1;
    const auto& out = outgoing_[origin_[tw]];
    next_[h] = out[(slot[tw] + out.size() - 1) % out.size()];
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  face_.assign(origin_.size(), kNone);
  for (std::size_t h0 = 0; h0 < origin_.size(); ++h0) {
    if (face_[h0] != kNone) continue;
    const std::size_t f = face_first_.size();
    face_first_.push_back(h0);
    double area2 = 0.0;
    std::size_t h = h0;
    do {
      face_[h] = f;
      const Point p = positions_[origin_[h]];
      const Point q = positions_[target(h)];
      area2 += cross(p, q);
      h = next_[h];
    } while (h != h0);
    face_area_.push_back(0.5 * area2);
  }

  std::vector<std::pair<Point, Point>> kept;
  kept.reserve(origin_.size() / 2);
  for (std::size_t h = 0; h < origin_.size(); h += 2) kept.emplace_back(positions_[origin_[h]], positions_[origin_[h + 1]]);
  if (!kept.empty()) edge_grid_.emplace(std::move(kept));
}

std::vector<std::size_t> Arrangement::face_cycle(std::size_t f) const {
  std::vector<std::size_t> out;
  const std::size_t h0 = face_first_.at(f);
  std::size_t h = h0;
  do {
    out.push_back(origin_[h]);
    h = next_[h];
  } while (h != h0);
  return out;
}

std::optional<std::size_t> Arrangement::face_of(Point p) const {
  if (!edge_grid_) return std::nullopt;
  const auto hit = edge_grid_->nearest(p);
  if (!hit || hit->distance <= tau_.value()) return std::nullopt;
  const std::size_t h = 2 * hit->id;
  if (hit->param > 0.0 && hit->param < 1.0) {
    const Point a = positions_[origin_[h]];
    const Point b = positions_[target(h)];
    return face_[cross(b - a, p - a) > 0.0 ? h : h + 1];
  }
  // Nearest feature is a vertex: pick the wedge around it containing p.
  const std::size_t w = hit->param <= 0.0 ? origin_[h] : target(h);
  const auto& out = outgoing_[w];
  const double theta = angle_of(p - positions_[w]);
  std::size_t pick = out.back();
  for (std::size_t k : out) {
    if (angle_of(positions_[target(k)] - positions_[w]) <= theta) pick = k;
  }
  return face_[pick];
}

}  // namespace jordan
