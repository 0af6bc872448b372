#include <doctest.h>

#include <random>

#include "jordan/error.hpp"
#include "jordan/oracle.hpp"
#include "jordan/topology.hpp"
#include "support.hpp"

using namespace jordan;

namespace {

SimplePolygon pinched(double waist) {
  return SimplePolygon::certify(testing::uniform_params({{-3, -1}, {-0.2, -1}, {-0.2, -waist / 2}, {0.2, -waist / 2},
                                                          {0.2, -1}, {3, -1}, {3, 1}, {0.2, 1}, {0.2, waist / 2},
                                                          {-0.2, waist / 2}, {-0.2, 1}, {-3, 1}}));
}

}  // namespace

TEST_CASE("winding number") {
  const ParamPolygon sq = testing::square();
  CHECK(oracle::winding_number(sq, {0, 0}) == 1);
  CHECK(oracle::winding_number(sq, {3, 0}) == 0);
  std::vector<Point> cw(sq.vertices().rbegin(), sq.vertices().rend());
  CHECK(oracle::winding_number(testing::uniform_params(cw), {0, 0}) == -1);
  CHECK_THROWS_AS(oracle::winding_number(sq, {1, 0}), InvalidArgument);
}

TEST_CASE("naive self-intersections") {
  CHECK(oracle::naive_self_intersections(testing::square()).empty());
  const auto b = oracle::naive_self_intersections(testing::bowtie());
  REQUIRE(b.size() == 1);
  CHECK(b[0].kind == IntersectionKind::NonAdjacentCross);

  // Sorted, and led by the production scan's answer.
  const ParamPolygon looped = sample(testing::epicycle(), 512);
  const auto all = oracle::naive_self_intersections(looped);
  REQUIRE(all.size() > 1);
  CHECK(std::is_sorted(all.begin(), all.end()));
  const auto first = find_illegal_intersection(looped, Tolerance{});
  REQUIRE(first.has_value());
  CHECK(first->i == all.front().i);
  CHECK(first->j == all.front().j);
  CHECK(all.empty() == is_simple(looped, Tolerance{}));
  CHECK(oracle::naive_self_intersections(simplify(looped).polygon.polygon()).empty());
}

TEST_CASE("grid path") {
  const ClosedCurve circle = ClosedCurve::unit_circle();
  const SimplePolygon poly = SimplePolygon::certify(sample(circle, 256));
  const double eps = band_radius(circle, poly.polygon());
  const auto grid = oracle::make_grid(poly.polygon(), eps / 4);
  const auto p = oracle::grid_path(poly, eps, {0, 0}, {0.5, 0.2}, grid);
  REQUIRE(p.has_value());
  CHECK(p->points.front() == Point{0, 0});
  CHECK(p->points.back() == Point{0.5, 0.2});
  for (std::size_t k = 0; k + 1 < p->points.size(); ++k) CHECK(distance(p->points[k], p->points[k + 1]) <= eps);

  const auto same = oracle::grid_path(poly, eps, {0.1, 0.1}, {0.1, 0.1}, grid);
  REQUIRE(same.has_value());
  CHECK(same->points.size() == 1);

  CHECK_THROWS_AS(oracle::grid_path(poly, eps, {0, 0}, {0.5, 0}, oracle::make_grid(poly.polygon(), eps)),
                  InvalidArgument);
}

TEST_CASE("grid path across a waist") {
  const SimplePolygon poly = pinched(0.2);
  const Point a{-2, 0}, b{2, 0};
  // The waist is 0.2 wide: reachable only while eps < 0.1.
  const double narrow = 0.04, wide = 0.15;
  CHECK(oracle::grid_path(poly, narrow, a, b, oracle::make_grid(poly.polygon(), narrow / 4)).has_value());
  CHECK_FALSE(oracle::grid_path(poly, wide, a, b, oracle::make_grid(poly.polygon(), wide / 4)).has_value());

  // Monotone in eps on a fixed grid.
  const auto grid = oracle::make_grid(poly.polygon(), 0.01);
  bool reachable = true;
  for (double eps = 0.04; eps <= 0.2; eps += 0.01) {
    const bool now = oracle::grid_path(poly, eps, a, b, grid).has_value();
    CHECK((reachable || !now));
    reachable = now;
  }
  CHECK_FALSE(reachable);
}

TEST_CASE("rasterized free cells equal the exhaustive scan") {
  const SimplePolygon poly = simplify(sample(testing::limacon(), 128)).polygon;
  for (double eps : {0.02, 0.05, 0.11}) {
    const auto grid = oracle::make_grid(poly.polygon(), eps / 4);
    CHECK(oracle::free_cells(poly, eps, grid) == oracle::free_cells(poly, eps, grid, true));
  }
  const auto grid = oracle::make_grid(poly.polygon(), 0.01);
  const auto cells = oracle::free_cells(poly, 0.04, grid);
  CHECK(cells.size() == oracle::grid_columns(grid) * oracle::grid_rows(grid));
}
