#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "jordan/arrangement.hpp"
#include "jordan/error.hpp"
#include "jordan/routing.hpp"
#include "jordan/spatial.hpp"
#include "jordan/topology.hpp"
#include "support.hpp"

using namespace jordan;

TEST_CASE("segment grid nearest matches brute force") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::pair<Point, Point>> segs;
  for (int k = 0; k < 300; ++k) {
    const Point a{u(rng), u(rng)};
    segs.emplace_back(a, a + Point{0.1 * u(rng), 0.1 * u(rng)});
  }
  const SegmentGrid grid(segs);
  for (int k = 0; k < 2000; ++k) {
    const Point p{1.5 * u(rng), 1.5 * u(rng)};
    double best = 1e300;
    std::size_t id = 0;
    for (std::size_t s = 0; s < segs.size(); ++s) {
      const double d = point_segment_distance(p, segs[s].first, segs[s].second);
      if (d < best) best = d, id = s;
    }
    const auto hit = grid.nearest(p);
    REQUIRE(hit.has_value());
    CHECK(hit->distance == best);
    CHECK(hit->id == id);
    CHECK(grid.any_within(p, best * 1.01 + 1e-12));
    CHECK_FALSE(grid.any_within(p, best * 0.99));
  }
  // Segment distance against the pairwise minimum.
  for (int k = 0; k < 200; ++k) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
    double best = 1e300;
    for (const auto& [c, d] : segs) best = std::min(best, segment_segment_distance(a, b, c, d));
    CHECK(grid.segment_distance(a, b) == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("nearest ties go to the smaller id") {
  const SegmentGrid grid({{{0, 1}, {1, 1}}, {{0, -1}, {1, -1}}, {{0, 1}, {1, 1}}});
  CHECK(grid.nearest({0.5, 0})->id == 0);
}

TEST_CASE("polygon locator agrees with crossing parity") {
  const SimplePolygon p = simplify(sample(testing::limacon(), 300), Tolerance{}).polygon;
  const PolygonLocator loc(p.vertices());
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  for (int k = 0; k < 3000; ++k) {
    const Point q{u(rng), u(rng) - 0.5};
    if (distance_to(p.polygon(), q) < 1e-9) continue;
    CHECK(loc.inside(q) == (contains(p, q) == Location::Inside));
  }
}

TEST_CASE("point snapper merges within tau") {
  PointSnapper s(1e-6);
  CHECK(s.insert({0, 0}) == 0);
  CHECK(s.insert({1, 0}) == 1);
  CHECK(s.insert({5e-7, 0}) == 0);
  CHECK(s.insert({1 + 9e-7, 0}) == 1);
  CHECK(s.insert({2e-6, 0}) == 2);
  CHECK(s.find({1, 1}) == std::nullopt);
  CHECK(s.points().size() == 3);
}

TEST_CASE("arrangement of a square with its diagonals") {
  std::vector<ArrangementSegment> segs;
  const auto sq = testing::square().vertices();
  for (std::size_t i = 0; i < 4; ++i) segs.push_back({sq[i], sq[(i + 1) % 4], EdgeRole::Polygon});
  segs.push_back({sq[0], sq[2], EdgeRole::Connector});
  segs.push_back({sq[1], sq[3], EdgeRole::Connector});
  const std::vector<Point> sites{{0, 0}};
  const Arrangement arr(segs, sites, Tolerance{});
  CHECK(arr.vertex_count() == 5);
  CHECK(arr.half_edge_count() == 16);
  CHECK(arr.is_site(0));
  double bounded = 0.0;
  std::size_t triangles = 0;
  for (std::size_t f = 0; f < arr.face_count(); ++f) {
    if (arr.face_area(f) > 0) {
      bounded += arr.face_area(f);
      triangles += arr.face_cycle(f).size() == 3;
    }
  }
  CHECK(bounded == doctest::Approx(4.0));
  CHECK(triangles == 4);
  // Faces lie to the left of their half-edges.
  for (std::size_t h = 0; h < arr.half_edge_count(); ++h) {
    CHECK(arr.face(arr.next(h)) == arr.face(h));
    CHECK(arr.origin(arr.next(h)) == arr.target(h));
  }
  const auto f = arr.face_of({0.5, 0.1});
  REQUIRE(f.has_value());
  CHECK(arr.face_area(*f) == doctest::Approx(1.0));
  CHECK_FALSE(arr.face_of({0.5, 0.5}).has_value());
  const auto out = arr.face_of({5, 5});
  REQUIRE(out.has_value());
  CHECK(arr.face_area(*out) < 0.0);
}

TEST_CASE("arrangement keep predicate and pruning") {
  // A dangling segment is pruned; edges the predicate rejects disappear.
  std::vector<ArrangementSegment> segs;
  const auto sq = testing::square().vertices();
  for (std::size_t i = 0; i < 4; ++i) segs.push_back({sq[i], sq[(i + 1) % 4], EdgeRole::Polygon});
  segs.push_back({{0, 0}, {0.5, 0.5}, EdgeRole::Connector});
  segs.push_back({{-2, 0}, {2, 0}, EdgeRole::Rectangle});
  const Arrangement arr(segs, {}, Tolerance{}, [](Point a, Point b, EdgeRole) {
    const Point m = lerp(a, b, 0.5);
    return std::abs(m.x) < 1.0 + 1e-12;
  });
  std::size_t bounded = 0;
  for (std::size_t f = 0; f < arr.face_count(); ++f) bounded += arr.face_area(f) > 0;
  CHECK(bounded == 2);
  CHECK(arr.vertex_count() >= 6);
}

TEST_CASE("ear clipping") {
  const SimplePolygon p = simplify(sample(testing::limacon(), 200), Tolerance{}).polygon;
  const auto& ring = p.vertices();
  const auto tris = ear_clip(ring);
  CHECK(tris.size() == ring.size() - 2);
  double area = 0.0;
  for (const Triangle& t : tris) {
    const double a = 0.5 * cross(ring[t[1]] - ring[t[0]], ring[t[2]] - ring[t[0]]);
    CHECK(a > 0.0);
    area += a;
  }
  CHECK(area == doctest::Approx(std::abs(signed_area(ring))).epsilon(1e-9));

  std::vector<Point> cw(ring.rbegin(), ring.rend());
  CHECK(ear_clip(cw).size() == ring.size() - 2);
}

TEST_CASE("funnel routing in a U shape") {
  // U: arms x in [0,1] and [2,3], bottom y in [0,1].
  const std::vector<Point> u{{0, 0}, {3, 0}, {3, 3}, {2, 3}, {2, 1}, {1, 1}, {1, 3}, {0, 3}};
  const TriangulatedRing tr(u);
  const Point a{0.5, 2.5}, b{2.5, 2.5};
  const PathPolyline path = tr.route(a, b);
  REQUIRE(path.points.size() == 4);
  CHECK(path.points.front() == a);
  CHECK(path.points.back() == b);
  // The taut path bends at the two inner corners.
  CHECK(path.points[1] == Point{1, 1});
  CHECK(path.points[2] == Point{2, 1});

  const PathPolyline mid = tr.route(a, b, true);
  double taut = 0.0, loose = 0.0;
  for (std::size_t k = 0; k + 1 < path.points.size(); ++k) taut += distance(path.points[k], path.points[k + 1]);
  for (std::size_t k = 0; k + 1 < mid.points.size(); ++k) loose += distance(mid.points[k], mid.points[k + 1]);
  CHECK(taut <= loose + 1e-12);
  // Every segment of either path stays inside the ring.
  for (const auto* p : {&path, &mid}) {
    for (std::size_t k = 0; k + 1 < p->points.size(); ++k) {
      for (int s = 1; s < 20; ++s) {
        CHECK(contains_ring(u, lerp(p->points[k], p->points[k + 1], s / 20.0)) != Location::Outside);
      }
    }
  }
  CHECK_THROWS_AS(tr.locate({1.5, 2.0}), ConstructionFailed);
  CHECK(tr.route(a, {0.5, 0.5}).points.size() == 2);
}
