#include <doctest.h>

#include "jordan/error.hpp"
#include "jordan/regions.hpp"
#include "jordan/topology.hpp"
#include "support.hpp"

using namespace jordan;

namespace {

struct Circle {
  ClosedCurve curve = ClosedCurve::unit_circle();
  SimplePolygon poly = SimplePolygon::certify(sample(curve, 1024), Tolerance{}, ScanMethod::Sweep);
  double eps = band_radius(curve, poly.polygon());
};

}  // namespace

TEST_CASE("classification on the circle") {
  const Circle c;
  CHECK(classify(c.poly, c.eps, {0, 0}) == RegionLabel::Interior);
  CHECK(classify(c.poly, c.eps, {3, 0}) == RegionLabel::Exterior);
  CHECK(distance_to(c.poly.polygon(), {1, 0}) < c.eps);
  CHECK(classify(c.poly, c.eps, {1, 0}) == RegionLabel::BoundaryBand);
  CHECK(classify(c.poly, c.eps, {1.0 - 0.5 * c.eps, 0.001}) == RegionLabel::BoundaryBand);
  CHECK(std::string(to_string(RegionLabel::BoundaryBand)) == "BoundaryBand");
}

TEST_CASE("interior witness on the circle") {
  const Circle c;
  const WitnessReport w = interior_witness(c.poly);
  CHECK(norm(w.e) <= 2.0 * c.eps);
  CHECK(w.clearance == doctest::Approx(1.0).epsilon(0.01));
  CHECK(contains(c.poly, w.e) == Location::Inside);
  CHECK(w.distance_l == doctest::Approx(w.distance_r).epsilon(1e-6));
  CHECK(testing::brute_distance(c.poly.vertices(), w.e) == doctest::Approx(w.clearance).epsilon(1e-6));
}

TEST_CASE("interior witness on the square") {
  const SimplePolygon sq = SimplePolygon::certify(testing::square());
  const WitnessReport w = interior_witness(sq);
  CHECK(w.index_a == 0);
  CHECK(w.index_b == 2);
  CHECK(contains(sq, w.e) == Location::Inside);
  CHECK(w.clearance > 0.0);
  CHECK(w.clearance == doctest::Approx(testing::brute_distance(sq.vertices(), w.e)).epsilon(1e-6));
  // E lies on the perpendicular bisector of the diagonal A-B.
  CHECK(distance(w.e, w.a) == doctest::Approx(distance(w.e, w.b)).epsilon(1e-9));
}

TEST_CASE("interior witness on a non-convex polygon") {
  const Tolerance tau;
  const SimplifyResult r = simplify(sample(testing::limacon(), 512), tau);
  const WitnessReport w = interior_witness(r.polygon, tau);
  CHECK(contains(r.polygon, w.e, tau) == Location::Inside);
  CHECK(w.clearance == doctest::Approx(testing::brute_distance(r.polygon.vertices(), w.e)).epsilon(1e-6));
}

TEST_CASE("separation") {
  const Circle c;
  const auto hit = check_separation(c.poly, c.eps, PathPolyline{{{0, 0}, {3, 0}}});
  REQUIRE(hit.has_value());
  CHECK(distance(*hit, {1, 0}) < c.eps);
  CHECK(distance_to(c.poly.polygon(), *hit) < 1e-9);

  const SimplePolygon sq = SimplePolygon::certify(testing::square());
  PathPolyline stairs{{{0, 0}, {0.5, 0}, {0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {2.5, 1.5}}};
  const auto s = check_separation(sq, 0.05, stairs);
  REQUIRE(s.has_value());
  CHECK(s->x == doctest::Approx(1.0));
  CHECK(s->y == doctest::Approx(0.5));

  CHECK_THROWS_AS(check_separation(c.poly, c.eps, PathPolyline{{{0, 0}, {0.5, 0}}}), InvalidArgument);
  CHECK_THROWS_AS(check_separation(c.poly, c.eps, PathPolyline{{{1, 0}, {3, 0}}}), InvalidArgument);
}
