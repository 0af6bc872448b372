#include "jordan/routing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_map>

#include "jordan/error.hpp"

namespace jordan {

namespace {

bool in_closed_triangle(Point a, Point b, Point c, Point r) {
  return cross(b - a, r - a) >= 0.0 && cross(c - b, r - b) >= 0.0 && cross(a - c, r - c) >= 0.0;
}

// Bucket grid over the ring's vertices, used to find blockers of an ear.
class VertexBuckets {
 public:
  VertexBuckets(std::span<const Point> pts) {
    lo_ = hi_ = pts[0];
    for (const Point& p : pts) {
      lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
      hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
    }
    const double w = std::max(hi_.x - lo_.x, hi_.y - lo_.y);
    side_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(pts.size()))));
    cell_ = w > 0.0 ? w / static_cast<double>(side_) : 1.0;
    buckets_.resize(side_ * side_);
  }

  void add(std::size_t id, Point p) { buckets_[index(cx(p.x), cy(p.y))].push_back(id); }

  template <typename Fn>
  bool any(Point lo, Point hi, Fn&& fn) const {
    for (std::size_t y = cy(lo.y); y <= cy(hi.y); ++y) {
      for (std::size_t x = cx(lo.x); x <= cx(hi.x); ++x) {
        for (std::size_t id : buckets_[index(x, y)]) {
          if (fn(id)) return true;
        }
      }
    }
    return false;
  }

 private:
  std::size_t clamp(double v) const {
    if (!(v > 0.0)) return 0;
    return std::min(side_ - 1, static_cast<std::size_t>(v));
  }
  std::size_t cx(double x) const { return clamp((x - lo_.x) / cell_); }
  std::size_t cy(double y) const { return clamp((y - lo_.y) / cell_); }
  std::size_t index(std::size_t x, std::size_t y) const { return y * side_ + x; }

  Point lo_;
  Point hi_;
  double cell_ = 1.0;
  std::size_t side_ = 1;
  std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace

std::vector<Triangle> ear_clip(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  if (n < 3) throw InvalidArgument("ear_clip needs at least 3 vertices");
  std::vector<std::size_t> id(n);
  for (std::size_t k = 0; k < n; ++k) id[k] = k;
  if (signed_area(ring) < 0.0) std::reverse(id.begin(), id.end());
  std::vector<Point> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = ring[id[k]];

  std::vector<std::size_t> prev(n), next(n);
  for (std::size_t k = 0; k < n; ++k) {
    prev[k] = (k + n - 1) % n;
    next[k] = (k + 1) % n;
  }
  std::vector<std::uint8_t> removed(n, 0), blocking(n, 0);
  auto convex = [&](std::size_t k) { return cross(v[k] - v[prev[k]], v[next[k]] - v[k]) > 0.0; };
  VertexBuckets buckets(v);
  for (std::size_t k = 0; k < n; ++k) {
    if (!convex(k)) {
      blocking[k] = 1;
      buckets.add(k, v[k]);
    }
  }
  auto is_ear = [&](std::size_t k) {
    if (!convex(k)) return false;
    const std::size_t p = prev[k];
    const std::size_t q = next[k];
    const Point a = v[p], b = v[k], c = v[q];
    const Point lo{std::min({a.x, b.x, c.x}), std::min({a.y, b.y, c.y})};
    const Point hi{std::max({a.x, b.x, c.x}), std::max({a.y, b.y, c.y})};
    return !buckets.any(lo, hi, [&](std::size_t r) {
      if (removed[r] || !blocking[r] || r == p || r == k || r == q) return false;
      if (v[r] == a || v[r] == b || v[r] == c) return false;
      return in_closed_triangle(a, b, c, v[r]);
    });
  };

  std::vector<Triangle> out;
  out.reserve(n - 2);
  std::size_t remaining = n;
  std::size_t k = 0;
  std::size_t misses = 0;
  auto unlink = [&](std::size_t r) {
    removed[r] = 1;
    next[prev[r]] = next[r];
    prev[next[r]] = prev[r];
    --remaining;
    for (std::size_t w : {prev[r], next[r]}) {
      if (blocking[w] && convex(w)) blocking[w] = 0;
    }
  };
  while (remaining > 3) {
    if (is_ear(k)) {
      out.push_back({id[prev[k]], id[k], id[next[k]]});
      const std::size_t q = next[k];
      unlink(k);
      k = q;
      misses = 0;
      continue;
    }
    k = next[k];
    if (++misses <= remaining) continue;
    // No ear: drop a collinear vertex, which removes no area.
    std::size_t r = k;
    bool found = false;
    for (std::size_t s = 0; s < remaining; ++s, r = next[r]) {
      if (cross(v[r] - v[prev[r]], v[next[r]] - v[r]) == 0.0) {
        found = true;
        break;
      }
    }
    if (!found) throw ConstructionFailed("ear_clip: no ear found; ring is not simple");
    k = next[r];
    unlink(r);
    misses = 0;
  }
  if (cross(v[k] - v[prev[k]], v[next[k]] - v[k]) != 0.0) out.push_back({id[prev[k]], id[k], id[next[k]]});
  // Restore counterclockwise order for reversed input.
  for (auto& t : out) {
    if (cross(ring[t[1]] - ring[t[0]], ring[t[2]] - ring[t[0]]) < 0.0) std::swap(t[1], t[2]);
  }
  return out;
}

TriangulatedRing::TriangulatedRing(std::vector<Point> ring) : ring_(std::move(ring)), tris_(ear_clip(ring_)) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  neighbor_.assign(tris_.size(), {kNone, kNone, kNone});
  std::unordered_map<std::uint64_t, std::pair<std::size_t, int>> open;
  std::vector<std::pair<Point, Point>> edges;
  edges.reserve(3 * tris_.size());
  for (std::size_t t = 0; t < tris_.size(); ++t) {
    for (int e = 0; e < 3; ++e) {
      const std::size_t x = tris_[t][e];
      const std::size_t y = tris_[t][(e + 1) % 3];
      edges.emplace_back(ring_[x], ring_[y]);
      const std::uint64_t key = (static_cast<std::uint64_t>(std::min(x, y)) << 32) | std::max(x, y);
      auto [it, fresh] = open.try_emplace(key, t, e);
      if (fresh) continue;
      neighbor_[t][e] = it->second.first;
      neighbor_[it->second.first][it->second.second] = t;
    }
  }
  if (!edges.empty()) grid_.emplace(std::move(edges));
}

std::size_t TriangulatedRing::locate(Point p) const {
  if (!grid_) throw ConstructionFailed("route: empty triangulation");
  // The nearest triangle edge belongs to a triangle on p's side of it.
  const auto hit = grid_->nearest(p);
  const double scale = 1e-12 * (1.0 + std::abs(p.x) + std::abs(p.y));
  const Point lo{p.x - hit->distance - scale, p.y - hit->distance - scale};
  const Point hi{p.x + hit->distance + scale, p.y + hit->distance + scale};
  std::size_t pick = tris_.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t id : grid_->candidates(lo, hi)) {
    const std::size_t t = id / 3;
    const Point u = ring_[tris_[t][0]], v = ring_[tris_[t][1]], w = ring_[tris_[t][2]];
    if (in_closed_triangle(u, v, w, p)) return t;
    const double d = std::min({point_segment_distance(p, u, v), point_segment_distance(p, v, w),
                               point_segment_distance(p, w, u)});
    if (d < best) {
      best = d;
      pick = t;
    }
  }
  if (pick == tris_.size() || best > scale) throw ConstructionFailed("route: point lies outside the triangulation");
  return pick;
}

PathPolyline TriangulatedRing::route(Point a, Point b, bool midpoints) const {
  const std::size_t ta = locate(a);
  const std::size_t tb = locate(b);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(tris_.size(), kNone);
  std::deque<std::size_t> queue{ta};
  parent[ta] = ta;
  while (!queue.empty() && parent[tb] == kNone) {
    const std::size_t t = queue.front();
    queue.pop_front();
    for (std::size_t u : neighbor_[t]) {
      if (u == kNone || parent[u] != kNone) continue;
      parent[u] = t;
      queue.push_back(u);
    }
  }
  if (parent[tb] == kNone) throw ConstructionFailed("route: endpoints lie in disconnected triangles");
  std::vector<std::size_t> chain{tb};
  while (chain.back() != ta) chain.push_back(parent[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  const auto& ring = ring_;
  const auto& tris = tris_;

  // Portals as (left, right) seen while walking from a to b.
  std::vector<std::pair<Point, Point>> portals{{a, a}};
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const Triangle& t = tris[chain[k]];
    const Triangle& u = tris[chain[k + 1]];
    for (int e = 0; e < 3; ++e) {
      const std::size_t x = t[e];
      const std::size_t y = t[(e + 1) % 3];
      if (std::find(u.begin(), u.end(), x) != u.end() && std::find(u.begin(), u.end(), y) != u.end()) {
        portals.emplace_back(ring[y], ring[x]);
        break;
      }
    }
  }
  portals.emplace_back(b, b);

  PathPolyline path;
  path.points.push_back(a);
  if (midpoints) {
    for (std::size_t k = 1; k + 1 < portals.size(); ++k) path.points.push_back(lerp(portals[k].first, portals[k].second, 0.5));
    path.points.push_back(b);
    dedupe_consecutive(path);
    return path;
  }

  Point apex = a, left = a, right = a;
  std::size_t apex_i = 0, left_i = 0, right_i = 0;
  for (std::size_t i = 1; i < portals.size(); ++i) {
    const Point l = portals[i].first;
    const Point r = portals[i].second;
    if (cross(right - apex, r - apex) >= 0.0) {
      if (apex == right || cross(left - apex, r - apex) < 0.0) {
        right = r;
        right_i = i;
      } else {
        path.points.push_back(left);
        apex = left;
        apex_i = left_i;
        right = apex;
        right_i = apex_i;
        i = apex_i;
        continue;
      }
    }
    if (cross(left - apex, l - apex) <= 0.0) {
      if (apex == left || cross(right - apex, l - apex) > 0.0) {
        left = l;
        left_i = i;
      } else {
        path.points.push_back(right);
        apex = right;
        apex_i = right_i;
        left = apex;
        left_i = apex_i;
        i = apex_i;
        continue;
      }
    }
  }
  path.points.push_back(b);
  dedupe_consecutive(path);
  return path;
}

}  // namespace jordan
