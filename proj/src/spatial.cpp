#include "jordan/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jordan {

SegmentGrid::SegmentGrid(std::vector<std::pair<Point, Point>> segments, double cell_size)
    : segments_(std::move(segments)) {
  if (segments_.empty()) {
    offsets_.assign(2, 0);
    return;
  }
  Point lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point hi{-lo.x, -lo.y};
  double total = 0.0;
  for (const auto& [a, b] : segments_) {
    lo = {std::min({lo.x, a.x, b.x}), std::min({lo.y, a.y, b.y})};
    hi = {std::max({hi.x, a.x, b.x}), std::max({hi.y, a.y, b.y})};
    total += distance(a, b);
  }
  const double extent = std::max({hi.x - lo.x, hi.y - lo.y, 1e-12});
  double cell = cell_size > 0.0 ? cell_size : total / static_cast<double>(segments_.size());
  cell = std::max(cell, extent / 8192.0);
  const double max_cells = std::max(4096.0, 4.0 * static_cast<double>(segments_.size()));
  while (((hi.x - lo.x) / cell + 1.0) * ((hi.y - lo.y) / cell + 1.0) > max_cells) cell *= 1.5;
  cell_ = cell;
  origin_ = lo;
  nx_ = static_cast<std::size_t>((hi.x - lo.x) / cell_) + 1;
  ny_ = static_cast<std::size_t>((hi.y - lo.y) / cell_) + 1;

  std::vector<std::size_t> counts(nx_ * ny_ + 1, 0);
  auto for_cells = [&](const std::pair<Point, Point>& s, auto&& fn) {
    const std::size_t x0 = cell_x(std::min(s.first.x, s.second.x));
    const std::size_t x1 = cell_x(std::max(s.first.x, s.second.x));
    const std::size_t y0 = cell_y(std::min(s.first.y, s.second.y));
    const std::size_t y1 = cell_y(std::max(s.first.y, s.second.y));
    for (std::size_t j = y0; j <= y1; ++j) {
      for (std::size_t i = x0; i <= x1; ++i) fn(j * nx_ + i);
    }
  };
  for (const auto& s : segments_) for_cells(s, [&](std::size_t c) { ++counts[c + 1]; });
  for (std::size_t c = 1; c < counts.size(); ++c) counts[c] += counts[c - 1];
  offsets_ = counts;
  entries_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t id = 0; id < segments_.size(); ++id) {
    for_cells(segments_[id], [&](std::size_t c) { entries_[fill[c]++] = id; });
  }
}

std::size_t SegmentGrid::cell_x(double x) const {
  const double f = std::floor((x - origin_.x) / cell_);
  if (!(f > 0.0)) return 0;
  return std::min(static_cast<std::size_t>(f), nx_ - 1);
}

std::size_t SegmentGrid::cell_y(double y) const {
  const double f = std::floor((y - origin_.y) / cell_);
  if (!(f > 0.0)) return 0;
  return std::min(static_cast<std::size_t>(f), ny_ - 1);
}

template <typename Fn>
void SegmentGrid::visit_cells(std::size_t x0, std::size_t y0, std::size_t x1, std::size_t y1, Fn&& fn) const {
  for (std::size_t j = y0; j <= y1; ++j) {
    for (std::size_t i = x0; i <= x1; ++i) {
      const std::size_t c = j * nx_ + i;
      for (std::size_t k = offsets_[c]; k < offsets_[c + 1]; ++k) fn(entries_[k]);
    }
  }
}

std::optional<SegmentGrid::Hit> SegmentGrid::nearest(Point p) const {
  if (segments_.empty()) return std::nullopt;
  const auto cx = static_cast<std::ptrdiff_t>(cell_x(p.x));
  const auto cy = static_cast<std::ptrdiff_t>(cell_y(p.y));
  Hit best{0, std::numeric_limits<double>::infinity(), 0.0};
  auto consider = [&](std::size_t id) {
    const auto& [a, b] = segments_[id];
    const double s = closest_parameter(p, a, b);
    const double d = distance(p, lerp(a, b, s));
    if (d < best.distance || (d == best.distance && id < best.id)) best = {id, d, s};
  };
  const auto nx = static_cast<std::ptrdiff_t>(nx_);
  const auto ny = static_cast<std::ptrdiff_t>(ny_);
  const std::ptrdiff_t max_r = std::max(nx, ny);
  for (std::ptrdiff_t r = 0; r <= max_r; ++r) {
    auto cell = [&](std::ptrdiff_t i, std::ptrdiff_t j) {
      if (i < 0 || j < 0 || i >= nx || j >= ny) return;
      const auto c = static_cast<std::size_t>(j * nx + i);
      for (std::size_t k = offsets_[c]; k < offsets_[c + 1]; ++k) consider(entries_[k]);
    };
    if (r == 0) {
      cell(cx, cy);
    } else {
      for (std::ptrdiff_t i = cx - r; i <= cx + r; ++i) {
        cell(i, cy - r);
        cell(i, cy + r);
      }
      for (std::ptrdiff_t j = cy - r + 1; j <= cy + r - 1; ++j) {
        cell(cx - r, j);
        cell(cx + r, j);
      }
    }
    if (best.distance <= static_cast<double>(r) * cell_) break;
  }
  return best;
}

std::vector<std::size_t> SegmentGrid::candidates(Point lo, Point hi) const {
  std::vector<std::size_t> out;
  if (segments_.empty()) return out;
  visit_cells(cell_x(lo.x), cell_y(lo.y), cell_x(hi.x), cell_y(hi.y), [&](std::size_t id) {
    const auto& [a, b] = segments_[id];
    if (std::max(a.x, b.x) < lo.x || std::min(a.x, b.x) > hi.x) return;
    if (std::max(a.y, b.y) < lo.y || std::min(a.y, b.y) > hi.y) return;
    out.push_back(id);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SegmentGrid::any_within(Point p, double r) const {
  bool found = false;
  if (segments_.empty()) return false;
  visit_cells(cell_x(p.x - r), cell_y(p.y - r), cell_x(p.x + r), cell_y(p.y + r), [&](std::size_t id) {
    if (!found && point_segment_distance(p, segments_[id].first, segments_[id].second) <= r) found = true;
  });
  return found;
}

double SegmentGrid::segment_distance(Point a, Point b) const {
  const auto na = nearest(a);
  if (!na) return std::numeric_limits<double>::infinity();
  const double ub = std::min(na->distance, nearest(b)->distance);
  const Point lo{std::min(a.x, b.x) - ub, std::min(a.y, b.y) - ub};
  const Point hi{std::max(a.x, b.x) + ub, std::max(a.y, b.y) + ub};
  double best = ub;
  visit_cells(cell_x(lo.x), cell_y(lo.y), cell_x(hi.x), cell_y(hi.y), [&](std::size_t id) {
    best = std::min(best, segment_segment_distance(a, b, segments_[id].first, segments_[id].second));
  });
  return best;
}

PolygonLocator::PolygonLocator(std::span<const Point> ring) : ring_(ring.begin(), ring.end()) {
  const std::size_t n = ring_.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Point& p : ring_) {
    lo = std::min(lo, p.y);
    hi = std::max(hi, p.y);
  }
  strips_ = std::max<std::size_t>(1, n / 2);
  y0_ = lo;
  strip_ = std::max(hi - lo, 1e-12) / static_cast<double>(strips_);
  auto strip_of = [&](double y) {
    const double f = std::floor((y - y0_) / strip_);
    if (!(f > 0.0)) return std::size_t{0};
    return std::min(static_cast<std::size_t>(f), strips_ - 1);
  };
  std::vector<std::size_t> counts(strips_ + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = ring_[i];
    const Point b = ring_[(i + 1) % n];
    for (std::size_t s = strip_of(std::min(a.y, b.y)); s <= strip_of(std::max(a.y, b.y)); ++s) ++counts[s + 1];
  }
  for (std::size_t s = 1; s < counts.size(); ++s) counts[s] += counts[s - 1];
  offsets_ = counts;
  entries_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = ring_[i];
    const Point b = ring_[(i + 1) % n];
    for (std::size_t s = strip_of(std::min(a.y, b.y)); s <= strip_of(std::max(a.y, b.y)); ++s) entries_[fill[s]++] = i;
  }
}

bool PolygonLocator::inside(Point p) const {
  const std::size_t n = ring_.size();
  if (p.y < y0_ || p.y > y0_ + strip_ * static_cast<double>(strips_)) return false;
  const double f = std::floor((p.y - y0_) / strip_);
  const std::size_t s = f > 0.0 ? std::min(static_cast<std::size_t>(f), strips_ - 1) : 0;
  bool in = false;
  for (std::size_t k = offsets_[s]; k < offsets_[s + 1]; ++k) {
    const Point a = ring_[entries_[k]];
    const Point b = ring_[(entries_[k] + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x > p.x) in = !in;
    }
  }
  return in;
}

namespace {

std::uint64_t cell_hash(std::int64_t x, std::int64_t y) {
  return static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ULL ^ (static_cast<std::uint64_t>(y) + 0x632BE59BD9B4E019ULL);
}

}  // namespace

PointSnapper::PointSnapper(double tau) : tau_(tau), cell_(std::max(2.0 * tau, 1e-300)) {}

std::optional<std::size_t> PointSnapper::find(Point p) const {
  const std::int64_t cx = key(p.x);
  const std::int64_t cy = key(p.y);
  for (std::int64_t dx = -1; dx <= 1; ++dx) {
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      auto it = cells_.find(cell_hash(cx + dx, cy + dy));
      if (it == cells_.end()) continue;
      for (std::size_t v : it->second) {
        if (distance(points_[v], p) <= tau_) return v;
      }
    }
  }
  return std::nullopt;
}

std::size_t PointSnapper::insert(Point p) {
  if (auto hit = find(p)) return *hit;
  const std::size_t id = points_.size();
  points_.push_back(p);
  cells_[cell_hash(key(p.x), key(p.y))].push_back(id);
  return id;
}

}  // namespace jordan
