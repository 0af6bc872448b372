// Python module _jordankit. Points travel as (x, y) tuples; results that
// are plain records come back as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "jordan/connectivity.hpp"
#include "jordan/curve.hpp"
#include "jordan/error.hpp"
#include "jordan/fuzz.hpp"
#include "jordan/io.hpp"
#include "jordan/oracle.hpp"
#include "jordan/regions.hpp"
#include "jordan/simplifier.hpp"
#include "jordan/svg.hpp"
#include "jordan/topology.hpp"

namespace py = pybind11;
using namespace jordan;

namespace pybind11::detail {

template <>
struct type_caster<jordan::Point> {
  PYBIND11_TYPE_CASTER(jordan::Point, const_name("tuple[float, float]"));

  bool load(handle src, bool) {
    if (!src || !PySequence_Check(src.ptr()) || PyUnicode_Check(src.ptr())) return false;
    const auto seq = reinterpret_borrow<sequence>(src);
    if (seq.size() != 2) return false;
    try {
      value = {seq[0].cast<double>(), seq[1].cast<double>()};
    } catch (const cast_error&) {
      return false;
    }
    return true;
  }

  static handle cast(const jordan::Point& p, return_value_policy, handle) {
    return py::make_tuple(p.x, p.y).release();
  }
};

}  // namespace pybind11::detail

namespace {

py::object parse(const io::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

io::json unparse(const py::object& o) {
  return io::parse_json(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

ScanMethod method_from(const std::string& s) {
  if (s == "naive") return ScanMethod::Naive;
  if (s == "sweep") return ScanMethod::Sweep;
  throw InvalidArgument("method must be 'naive' or 'sweep'");
}

const char* location_name(Location l) {
  switch (l) {
    case Location::Inside:
      return "Inside";
    case Location::Outside:
      return "Outside";
    case Location::OnBoundary:
      return "OnBoundary";
  }
  return "?";
}

const char* kind_name(IntersectionKind k) {
  return k == IntersectionKind::AdjacentDegenerate ? "AdjacentDegenerate" : "NonAdjacentCross";
}

py::dict step_dict(const ReductionStep& s) {
  py::dict d;
  d["kind"] = kind_name(s.kind);
  d["i"] = s.i;
  d["j"] = s.j;
  d["vertices_before"] = s.vertices_before;
  d["vertices_after"] = s.vertices_after;
  d["mesh_before"] = s.mesh_before;
  d["mesh_after"] = s.mesh_after;
  d["new_side_length"] = s.new_side_length;
  d["kept_loop"] = s.kept_loop;
  return d;
}

py::dict face_dict(const FaceDescriptor& f) {
  py::dict d;
  d["id"] = f.id;
  d["role"] = to_string(f.role);
  d["area"] = f.area;
  d["boundary_size"] = f.boundary_size;
  return d;
}

py::dict separating_dict(const SeparatingPolygon& sep) {
  py::dict d;
  d["polygon"] = sep.polygon;
  d["face"] = sep.face;
  d["raw_vertices"] = sep.raw_vertices;
  py::list origins;
  for (VertexOrigin o : sep.origins) origins.append(o == VertexOrigin::Special ? "special" : "connector-crossing");
  d["origins"] = origins;
  return d;
}

}  // namespace

PYBIND11_MODULE(_jordankit, m) {
  m.doc() = "Polygonal approximation, reduction, classification and separation of closed curves";

  // Translators run newest first, so the derived types are registered last.
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  auto& failed = py::register_exception<ConstructionFailed>(m, "ConstructionFailed", PyExc_RuntimeError);
  py::register_exception<DegenerateCurve>(m, "DegenerateCurve", failed.ptr());
  py::register_exception<NotSameFace>(m, "NotSameFace", failed.ptr());

  py::class_<ClosedCurve>(m, "ClosedCurve")
      .def("evaluate", &ClosedCurve::evaluate, py::arg("t"))
      .def("__call__", &ClosedCurve::evaluate, py::arg("t"))
      .def("to_json", [](const ClosedCurve& c) { return parse(io::to_json(c)); })
      .def_static("from_json", [](const py::object& o) { return io::curve_from_json(unparse(o)); });

  m.def("unit_circle", &ClosedCurve::unit_circle);
  m.def(
      "ellipse",
      [](double a, double b, Point center, double rotation) { return ClosedCurve(EllipseCurve(a, b, center, rotation)); },
      py::arg("a"), py::arg("b"), py::arg("center") = Point{}, py::arg("rotation") = 0.0);
  m.def(
      "fourier",
      [](double x0, std::vector<double> xa, std::vector<double> xb, double y0, std::vector<double> ya,
         std::vector<double> yb) {
        return ClosedCurve(FourierCurve({x0, std::move(xa), std::move(xb)}, {y0, std::move(ya), std::move(yb)}));
      },
      py::arg("x0"), py::arg("xa"), py::arg("xb"), py::arg("y0"), py::arg("ya"), py::arg("yb"),
      "x(t) = x0 + sum xa[k-1] cos(2 pi k t) + xb[k-1] sin(2 pi k t), likewise y.");
  m.def(
      "polyline",
      [](std::vector<Point> pts, std::optional<std::vector<double>> knots) {
        return knots ? ClosedCurve(PolylineCurve(std::move(pts), std::move(*knots))) : ClosedCurve(PolylineCurve(std::move(pts)));
      },
      py::arg("points"), py::arg("knots") = py::none());

  py::class_<ParamPolygon>(m, "ParamPolygon")
      .def(py::init<std::vector<Point>, std::vector<double>>(), py::arg("vertices"), py::arg("params"))
      .def_property_readonly("vertices", &ParamPolygon::vertices)
      .def_property_readonly("params", &ParamPolygon::params)
      .def("__len__", &ParamPolygon::size)
      .def("to_json", [](const ParamPolygon& p) { return parse(io::to_json(p)); })
      .def_static("from_json", [](const py::object& o) { return io::polygon_from_json(unparse(o)); });

  py::class_<SimplePolygon>(m, "SimplePolygon")
      .def_static(
          "certify",
          [](const ParamPolygon& p, double tau, const std::string& method) {
            return SimplePolygon::certify(p, Tolerance(tau), method_from(method));
          },
          py::arg("polygon"), py::arg("tau") = Tolerance::kDefault, py::arg("method") = "naive")
      .def_property_readonly("polygon", &SimplePolygon::polygon)
      .def_property_readonly("vertices", &SimplePolygon::vertices)
      .def_property_readonly("orientation",
                             [](const SimplePolygon& p) { return p.orientation() == PolygonOrientation::CCW ? "CCW" : "CW"; })
      .def("__len__", &SimplePolygon::size);

  m.def("sample", &sample, py::arg("curve"), py::arg("n"));
  m.def("mesh", &mesh, py::arg("polygon"));
  m.def("band_radius", &band_radius, py::arg("curve"), py::arg("polygon"), py::arg("m") = 16);
  m.def("injectivity_gap", &injectivity_gap, py::arg("curve"), py::arg("s") = 0.05, py::arg("m") = 512);
  m.def(
      "refine_until", [](const ClosedCurve& c, double eps, std::size_t n0) { return refine_until(c, eps, n0); },
      py::arg("curve"), py::arg("eps_target"), py::arg("n0"));
  m.def(
      "satisfies_spacing",
      [](const ParamPolygon& p, bool allow_half) {
        return satisfies_spacing(p, allow_half ? SpacingRule::AllowHalf : SpacingRule::Strict);
      },
      py::arg("polygon"), py::arg("allow_half") = false);

  m.def(
      "find_illegal_intersection",
      [](const ParamPolygon& p, double tau, const std::string& method) -> py::object {
        const auto x = find_illegal_intersection(p, Tolerance(tau), method_from(method));
        if (!x) return py::none();
        py::dict d;
        d["kind"] = kind_name(x->kind);
        d["i"] = x->i;
        d["j"] = x->j;
        d["witness"] = x->witness;
        return std::move(d);
      },
      py::arg("polygon"), py::arg("tau") = Tolerance::kDefault, py::arg("method") = "naive");

  m.def(
      "simplify",
      [](const ParamPolygon& p, double tau, const std::string& method) {
        SimplifyOptions opts;
        opts.method = method_from(method);
        SimplifyResult r = simplify(p, Tolerance(tau), opts);
        py::list steps;
        for (const auto& s : r.steps) steps.append(step_dict(s));
        return py::make_tuple(std::move(r.polygon), steps);
      },
      py::arg("polygon"), py::arg("tau") = Tolerance::kDefault, py::arg("method") = "naive",
      "Returns (SimplePolygon, list of reduction steps).");

  m.def(
      "is_simple",
      [](const ParamPolygon& p, double tau, const std::string& method) { return is_simple(p, Tolerance(tau), method_from(method)); },
      py::arg("polygon"), py::arg("tau") = Tolerance::kDefault, py::arg("method") = "naive");
  m.def(
      "contains", [](const SimplePolygon& p, Point q, double tau) { return location_name(contains(p, q, Tolerance(tau))); },
      py::arg("polygon"), py::arg("point"), py::arg("tau") = Tolerance::kDefault);
  m.def("distance_to", &distance_to, py::arg("polygon"), py::arg("point"));
  m.def(
      "classify",
      [](const SimplePolygon& p, double eps, Point q, double tau) { return to_string(classify(p, eps, q, Tolerance(tau))); },
      py::arg("polygon"), py::arg("eps"), py::arg("point"), py::arg("tau") = Tolerance::kDefault);
  m.def(
      "interior_witness", [](const SimplePolygon& p, double tau) { return parse(io::to_json(interior_witness(p, Tolerance(tau)))); },
      py::arg("polygon"), py::arg("tau") = Tolerance::kDefault);
  m.def(
      "check_separation",
      [](const SimplePolygon& p, double eps, std::vector<Point> arc, double tau) {
        return check_separation(p, eps, PathPolyline{std::move(arc)}, Tolerance(tau));
      },
      py::arg("polygon"), py::arg("eps"), py::arg("arc"), py::arg("tau") = Tolerance::kDefault);

  py::class_<InteriorSubdivision>(m, "InteriorSubdivision")
      .def(py::init([](SimplePolygon p, double eps, double tau) { return InteriorSubdivision(std::move(p), eps, Tolerance(tau)); }),
           py::arg("polygon"), py::arg("eps"), py::arg("tau") = Tolerance::kDefault)
      .def_property_readonly("eps", &InteriorSubdivision::eps)
      .def("faces",
           [](const InteriorSubdivision& s) {
             py::list out;
             for (const auto& f : s.faces()) out.append(face_dict(f));
             return out;
           })
      .def("face_boundary", &InteriorSubdivision::face_boundary, py::arg("face"))
      .def("face_of", &InteriorSubdivision::face_of, py::arg("point"))
      .def("separating_polygon", [](const InteriorSubdivision& s, Point a) { return separating_dict(s.separating_polygon(a)); },
           py::arg("a"))
      .def(
          "connect",
          [](const InteriorSubdivision& s, Point a, Point b) {
            py::gil_scoped_release release;
            return s.connect(a, b).points;
          },
          py::arg("a"), py::arg("b"))
      .def("to_json", [](const InteriorSubdivision& s) { return parse(io::subdivision_to_json(s)); });

  m.def(
      "separating_polygon",
      [](const SimplePolygon& p, double eps, Point a, double tau) { return separating_dict(separating_polygon(p, eps, a, Tolerance(tau))); },
      py::arg("polygon"), py::arg("eps"), py::arg("a"), py::arg("tau") = Tolerance::kDefault);
  m.def(
      "connect",
      [](const SimplePolygon& p, double eps, Point a, Point b, double tau) { return connect(p, eps, a, b, Tolerance(tau)).points; },
      py::arg("polygon"), py::arg("eps"), py::arg("a"), py::arg("b"), py::arg("tau") = Tolerance::kDefault);

  m.def(
      "winding_number", [](const ParamPolygon& p, Point q, double tau) { return oracle::winding_number(p, q, Tolerance(tau)); },
      py::arg("polygon"), py::arg("point"), py::arg("tau") = Tolerance::kDefault);
  m.def(
      "grid_path",
      [](const SimplePolygon& p, double eps, Point a, Point b, std::optional<double> h) -> std::optional<std::vector<Point>> {
        const auto path = oracle::grid_path(p, eps, a, b, oracle::make_grid(p.polygon(), h.value_or(eps / 4.0)));
        if (!path) return std::nullopt;
        return path->points;
      },
      py::arg("polygon"), py::arg("eps"), py::arg("a"), py::arg("b"), py::arg("h") = py::none());

  m.def(
      "fuzz",
      [](std::uint64_t seed, std::size_t cases, std::size_t n, std::size_t mm, double tau, std::size_t threads, bool subdivision) {
        fuzz::Options o{seed, cases, n, mm, tau, threads, subdivision};
        fuzz::Report r;
        {
          py::gil_scoped_release release;
          r = fuzz::run(o);
        }
        return parse(io::to_json(r));
      },
      py::arg("seed"), py::arg("cases") = 100, py::arg("n") = 512, py::arg("m") = 16, py::arg("tau") = Tolerance::kDefault,
      py::arg("threads") = 0, py::arg("subdivision") = true, "Runs the seeded property suite and returns the report dict.");

  m.def(
      "render_svg",
      [](std::optional<ClosedCurve> curve, std::optional<ParamPolygon> polygon, double eps, std::optional<py::dict> witness,
         std::optional<ParamPolygon> separating, std::optional<std::vector<Point>> path) {
        SvgScene scene;
        scene.curve = std::move(curve);
        scene.polygon = std::move(polygon);
        scene.eps = eps;
        if (witness) scene.witness = io::witness_from_json(unparse(*witness));
        scene.separating = std::move(separating);
        if (path) scene.path = PathPolyline{std::move(*path)};
        return render_svg(scene);
      },
      py::arg("curve") = py::none(), py::arg("polygon") = py::none(), py::arg("eps") = 0.0, py::arg("witness") = py::none(),
      py::arg("separating") = py::none(), py::arg("path") = py::none());
}
