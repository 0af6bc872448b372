#include <doctest.h>

#include "jordan/connectivity.hpp"
#include "jordan/error.hpp"
#include "jordan/fuzz.hpp"
#include "jordan/io.hpp"
#include "jordan/svg.hpp"
#include "support.hpp"

using namespace jordan;

namespace {

template <typename T, typename Read>
void check_round_trip(const T& value, Read read) {
  const std::string once = io::dump(io::to_json(value));
  CHECK(io::dump(io::to_json(read(io::parse_json(once)))) == once);
}

}  // namespace

TEST_CASE("curves and polygons round-trip") {
  const std::vector<ClosedCurve> curves{
      ClosedCurve::unit_circle(), ClosedCurve(EllipseCurve(2.0, 0.5, {1, -1}, 0.25)), testing::limacon(),
      ClosedCurve(PolylineCurve({{0, 0}, {1, 0}, {0, 1}})),
      ClosedCurve(PolylineCurve({{0, 0}, {1, 0}, {0, 1}}, {0.0, 0.5, 0.75}))};
  for (const auto& c : curves) {
    check_round_trip(c, io::curve_from_json);
    const ClosedCurve back = io::curve_from_json(io::to_json(c));
    for (double t : {0.0, 0.1, 0.37, 0.9}) CHECK(back(t) == c(t));
  }
  check_round_trip(sample(testing::limacon(), 64), io::polygon_from_json);
}

TEST_CASE("results round-trip") {
  const SimplifyResult r = simplify(sample(testing::limacon(), 128));
  const io::json j = io::to_json(r);
  CHECK(io::polygon_from_json(j).vertices() == r.polygon.vertices());
  const auto steps = io::steps_from_json(j);
  REQUIRE(steps.size() == r.steps.size());
  CHECK(steps.front().i == r.steps.front().i);
  CHECK(steps.front().kept_loop == r.steps.front().kept_loop);

  check_round_trip(io::Classification{{3, 0}, 0.1, RegionLabel::Exterior}, io::classification_from_json);
  check_round_trip(interior_witness(r.polygon), io::witness_from_json);
  check_round_trip(PathPolyline{{{0, 0}, {1, 2}}}, io::path_from_json);

  const ClosedCurve circle = ClosedCurve::unit_circle();
  const SimplePolygon poly = SimplePolygon::certify(sample(circle, 128));
  const InteriorSubdivision sub(poly, band_radius(circle, poly.polygon()));
  const SeparatingPolygon sep = sub.separating_polygon({0, 0});
  check_round_trip(sep, [](const io::json& j) { return io::separating_from_json(j); });

  const io::json dump = io::subdivision_to_json(sub);
  const auto faces = io::subdivision_from_json(dump);
  CHECK(faces.size() == sub.faces().size());
  for (const auto& f : faces) {
    CHECK(f.role == sub.describe(f.id).role);
    CHECK(f.boundary == sub.face_boundary(f.id));
  }
  CHECK(dump.at("faces").at(0).at("role").is_string());
}

TEST_CASE("malformed input is an invalid argument") {
  CHECK_THROWS_AS(io::parse_json("{"), InvalidArgument);
  CHECK_THROWS_AS(io::curve_from_json(io::parse_json(R"({"type":"spiral"})")), InvalidArgument);
  CHECK_THROWS_AS(io::polygon_from_json(io::parse_json(R"({"vertices":[[0,0],[1,0],[0,1]]})")), InvalidArgument);
  CHECK_THROWS_AS(io::polygon_from_json(io::parse_json(R"({"vertices":[[0,0],[1,0],[0,1]],"params":[0,0.5,0.2]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(io::label_from_string("inside"), InvalidArgument);
  CHECK_THROWS_AS(io::read_json("/nonexistent/file.json"), InvalidArgument);
}

TEST_CASE("fuzz reports are deterministic and round-trip") {
  fuzz::Options opts;
  opts.seed = 9;
  opts.cases = 3;
  opts.n = 128;
  opts.threads = 1;
  const std::string one = io::dump(io::to_json(fuzz::run(opts)));
  opts.threads = 3;
  const std::string two = io::dump(io::to_json(fuzz::run(opts)));
  CHECK(one == two);
  CHECK(io::dump(io::to_json(io::fuzz_report_from_json(io::parse_json(one)))) == one);
  CHECK(one.find("thread") == std::string::npos);
}

TEST_CASE("generated curves depend only on seed and index") {
  const auto a = fuzz::generate_curve(5, 17);
  const auto b = fuzz::generate_curve(5, 17);
  CHECK(io::dump(io::to_json(ClosedCurve(a.curve))) == io::dump(io::to_json(ClosedCurve(b.curve))));
  CHECK(a.gap > 0.05);
  CHECK(a.harmonics <= 5);
  CHECK(fuzz::generate_curve(5, 18).curve.x().a0 != a.curve.x().a0);
}

TEST_CASE("svg layers") {
  const ClosedCurve circle = ClosedCurve::unit_circle();
  SvgScene scene;
  scene.curve = circle;
  scene.polygon = sample(circle, 16);
  scene.eps = 0.05;
  scene.path = PathPolyline{{{0, 0}, {0.5, 0}}};
  const std::string svg = render_svg(scene);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  for (const char* id : {"id=\"curve\"", "id=\"polygon\"", "id=\"band\"", "id=\"path\""}) {
    CHECK(svg.find(id) != std::string::npos);
  }
  CHECK(svg.find("id=\"witness\"") == std::string::npos);
  // Bounding box [-1,1]^2 grown by 10%.
  CHECK(svg.find("viewBox=\"-1.2 -1.2 2.4 2.4\"") != std::string::npos);
  CHECK(svg.find("stroke-width=\"0.1\"") != std::string::npos);
}
