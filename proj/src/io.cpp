#include "jordan/io.hpp"

#include <fstream>
#include <sstream>

#include "jordan/error.hpp"

namespace jordan::io {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string(what) + ": " + e.what());
  }
}

json series_to_json(const FourierSeries& s) { return {{"a0", s.a0}, {"a", s.a}, {"b", s.b}}; }

FourierSeries series_from_json(const json& j) {
  return {j.at("a0").get<double>(), j.value("a", std::vector<double>{}), j.value("b", std::vector<double>{})};
}

std::vector<Point> points_from_json(const json& j) {
  std::vector<Point> out;
  out.reserve(j.size());
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

json points_to_json(std::span<const Point> pts) {
  json out = json::array();
  for (const Point& p : pts) out.push_back(to_json(p));
  return out;
}

FaceRole role_from_string(const std::string& s) {
  if (s == "band") return FaceRole::Band;
  if (s == "interior-face") return FaceRole::InteriorFace;
  if (s == "exterior") return FaceRole::Exterior;
  throw InvalidArgument("unknown face role: " + s);
}

const char* kind_name(IntersectionKind k) {
  return k == IntersectionKind::AdjacentDegenerate ? "AdjacentDegenerate" : "NonAdjacentCross";
}

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

json parse_json(const std::string& text) {
  return guarded("invalid JSON", [&] { return json::parse(text); });
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << text;
}

json to_json(Point p) { return json::array({p.x, p.y}); }

Point point_from_json(const json& j) {
  return guarded("point", [&] {
    if (!j.is_array() || j.size() != 2) throw InvalidArgument("point must be [x, y]");
    return Point{j.at(0).get<double>(), j.at(1).get<double>()};
  });
}

json to_json(const ClosedCurve& curve) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FourierCurve>) {
          return {{"type", "fourier"}, {"x", series_to_json(c.x())}, {"y", series_to_json(c.y())}};
        } else if constexpr (std::is_same_v<T, EllipseCurve>) {
          return {{"type", "ellipse"}, {"a", c.a()}, {"b", c.b()}, {"center", to_json(c.center())}, {"rotation", c.rotation()}};
        } else {
          json j = {{"type", "polyline"}, {"points", points_to_json(c.points())}};
          if (!c.arclength_knots()) j["knots"] = c.knots();
          return j;
        }
      },
      curve.form());
}

ClosedCurve curve_from_json(const json& j) {
  return guarded("curve", [&]() -> ClosedCurve {
    const std::string type = j.at("type").get<std::string>();
    if (type == "fourier") return FourierCurve(series_from_json(j.at("x")), series_from_json(j.at("y")));
    if (type == "ellipse") {
      const Point c = j.contains("center") ? point_from_json(j.at("center")) : Point{};
      return EllipseCurve(j.at("a").get<double>(), j.at("b").get<double>(), c, j.value("rotation", 0.0));
    }
    if (type == "polyline") {
      auto pts = points_from_json(j.at("points"));
      if (j.contains("knots")) return PolylineCurve(std::move(pts), j.at("knots").get<std::vector<double>>());
      return PolylineCurve(std::move(pts));
    }
    throw InvalidArgument("unknown curve type: " + type);
  });
}

json to_json(const ParamPolygon& poly) {
  return {{"vertices", points_to_json(poly.vertices())}, {"params", poly.params()}};
}

ParamPolygon polygon_from_json(const json& j) {
  return guarded("polygon", [&] {
    return ParamPolygon(points_from_json(j.at("vertices")), j.at("params").get<std::vector<double>>());
  });
}

json to_json(const SimplifyResult& result) {
  json j = to_json(result.polygon.polygon());
  json steps = json::array();
  for (const auto& s : result.steps) {
    steps.push_back({{"kind", kind_name(s.kind)},
                     {"i", s.i},
                     {"j", s.j},
                     {"vertices_before", s.vertices_before},
                     {"vertices_after", s.vertices_after},
                     {"mesh_before", s.mesh_before},
                     {"mesh_after", s.mesh_after},
                     {"new_side_length", s.new_side_length},
                     {"kept_loop", s.kept_loop}});
  }
  j["steps"] = std::move(steps);
  return j;
}

std::vector<ReductionStep> steps_from_json(const json& j) {
  return guarded("steps", [&] {
    std::vector<ReductionStep> out;
    for (const auto& s : j.at("steps")) {
      const std::string kind = s.at("kind").get<std::string>();
      if (kind != "AdjacentDegenerate" && kind != "NonAdjacentCross") throw InvalidArgument("unknown step kind: " + kind);
      out.push_back({kind == "AdjacentDegenerate" ? IntersectionKind::AdjacentDegenerate : IntersectionKind::NonAdjacentCross,
                     s.at("i").get<std::size_t>(), s.at("j").get<std::size_t>(), s.at("vertices_before").get<std::size_t>(),
                     s.at("vertices_after").get<std::size_t>(), s.at("mesh_before").get<double>(),
                     s.at("mesh_after").get<double>(), s.at("new_side_length").get<double>(), s.at("kept_loop").get<bool>()});
    }
    return out;
  });
}

RegionLabel label_from_string(const std::string& s) {
  if (s == "Interior") return RegionLabel::Interior;
  if (s == "Exterior") return RegionLabel::Exterior;
  if (s == "BoundaryBand") return RegionLabel::BoundaryBand;
  throw InvalidArgument("unknown region label: " + s);
}

json to_json(const Classification& c) {
  return {{"point", to_json(c.point)}, {"eps", c.eps}, {"label", to_string(c.label)}};
}

Classification classification_from_json(const json& j) {
  return guarded("classification", [&] {
    return Classification{point_from_json(j.at("point")), j.at("eps").get<double>(),
                          label_from_string(j.at("label").get<std::string>())};
  });
}

json to_json(const WitnessReport& w) {
  return {{"index_a", w.index_a},
          {"index_b", w.index_b},
          {"A", to_json(w.a)},
          {"B", to_json(w.b)},
          {"gamma", json::array({to_json(w.gamma_start), to_json(w.gamma_end)})},
          {"C", to_json(w.c)},
          {"D", to_json(w.d)},
          {"E", to_json(w.e)},
          {"clearance", w.clearance},
          {"distance_L", w.distance_l},
          {"distance_R", w.distance_r},
          {"variant", w.variant},
          {"bisection_iterations", w.bisection_iterations}};
}

WitnessReport witness_from_json(const json& j) {
  return guarded("witness", [&] {
    WitnessReport w;
    w.index_a = j.at("index_a").get<std::size_t>();
    w.index_b = j.at("index_b").get<std::size_t>();
    w.a = point_from_json(j.at("A"));
    w.b = point_from_json(j.at("B"));
    w.gamma_start = point_from_json(j.at("gamma").at(0));
    w.gamma_end = point_from_json(j.at("gamma").at(1));
    w.c = point_from_json(j.at("C"));
    w.d = point_from_json(j.at("D"));
    w.e = point_from_json(j.at("E"));
    w.clearance = j.at("clearance").get<double>();
    w.distance_l = j.at("distance_L").get<double>();
    w.distance_r = j.at("distance_R").get<double>();
    w.variant = j.at("variant").get<int>();
    w.bisection_iterations = j.at("bisection_iterations").get<int>();
    return w;
  });
}

json to_json(const PathPolyline& path) { return {{"points", points_to_json(path.points)}}; }

PathPolyline path_from_json(const json& j) {
  return guarded("path", [&] { return PathPolyline{points_from_json(j.at("points"))}; });
}

json to_json(const SeparatingPolygon& sep) {
  json origins = json::array();
  for (VertexOrigin o : sep.origins) origins.push_back(o == VertexOrigin::Special ? "special" : "connector-crossing");
  return {{"face", sep.face},
          {"raw_vertices", sep.raw_vertices},
          {"polygon", to_json(sep.polygon.polygon())},
          {"origins", std::move(origins)}};
}

SeparatingPolygon separating_from_json(const json& j, Tolerance tau) {
  return guarded("separating polygon", [&] {
    std::vector<VertexOrigin> origins;
    for (const auto& o : j.at("origins")) {
      const std::string s = o.get<std::string>();
      if (s != "special" && s != "connector-crossing") throw InvalidArgument("unknown vertex origin: " + s);
      origins.push_back(s == "special" ? VertexOrigin::Special : VertexOrigin::ConnectorCrossing);
    }
    SeparatingPolygon sep{SimplePolygon::certify(polygon_from_json(j.at("polygon")), tau, ScanMethod::Sweep),
                          j.at("face").get<std::size_t>(), j.at("raw_vertices").get<std::size_t>(), std::move(origins)};
    if (sep.origins.size() != sep.polygon.size()) throw InvalidArgument("origins and vertices differ in length");
    return sep;
  });
}

json subdivision_to_json(const InteriorSubdivision& sub) {
  json faces = json::array();
  for (const FaceDescriptor& f : sub.faces()) {
    faces.push_back({{"id", f.id}, {"role", to_string(f.role)}, {"area", f.area}, {"boundary", points_to_json(sub.face_boundary(f.id))}});
  }
  return {{"eps", sub.eps()}, {"faces", std::move(faces)}};
}

std::vector<FaceDump> subdivision_from_json(const json& j) {
  return guarded("subdivision", [&] {
    std::vector<FaceDump> out;
    for (const auto& f : j.at("faces")) {
      out.push_back({f.at("id").get<std::size_t>(), role_from_string(f.at("role").get<std::string>()),
                     f.at("area").get<double>(), points_from_json(f.at("boundary"))});
    }
    return out;
  });
}

json to_json(const fuzz::Report& report) {
  const auto& o = report.options;
  json cases = json::array();
  for (const auto& c : report.cases) {
    json findings = json::array();
    for (const auto& f : c.findings) findings.push_back({{"check", f.check}, {"detail", f.detail}});
    json jc = {{"index", c.index},
               {"harmonics", c.harmonics},
               {"attempts", c.attempts},
               {"gap", c.gap},
               {"eps", c.eps},
               {"vertices_in", c.vertices_in},
               {"vertices_out", c.vertices_out},
               {"steps", c.steps},
               {"witness_clearance", c.witness_clearance},
               {"separating_vertices", c.separating_vertices},
               {"path_points", c.path_points},
               {"grid_reachable", c.grid_reachable},
               {"findings", std::move(findings)}};
    if (c.curve) jc["curve"] = to_json(ClosedCurve(*c.curve));
    cases.push_back(std::move(jc));
  }
  return {{"seed", o.seed},
          {"cases", o.cases},
          {"n", o.n},
          {"m", o.m},
          {"tau", o.tau},
          {"subdivision", o.subdivision},
          {"findings", report.finding_count()},
          {"results", std::move(cases)}};
}

fuzz::Report fuzz_report_from_json(const json& j) {
  return guarded("fuzz report", [&] {
    fuzz::Report r;
    r.options.seed = j.at("seed").get<std::uint64_t>();
    r.options.cases = j.at("cases").get<std::size_t>();
    r.options.n = j.at("n").get<std::size_t>();
    r.options.m = j.at("m").get<std::size_t>();
    r.options.tau = j.at("tau").get<double>();
    r.options.subdivision = j.at("subdivision").get<bool>();
    for (const auto& jc : j.at("results")) {
      fuzz::CaseResult c;
      c.index = jc.at("index").get<std::size_t>();
      c.harmonics = jc.at("harmonics").get<std::size_t>();
      c.attempts = jc.at("attempts").get<int>();
      c.gap = jc.at("gap").get<double>();
      c.eps = jc.at("eps").get<double>();
      c.vertices_in = jc.at("vertices_in").get<std::size_t>();
      c.vertices_out = jc.at("vertices_out").get<std::size_t>();
      c.steps = jc.at("steps").get<std::size_t>();
      c.witness_clearance = jc.at("witness_clearance").get<double>();
      c.separating_vertices = jc.at("separating_vertices").get<std::size_t>();
      c.path_points = jc.at("path_points").get<std::size_t>();
      c.grid_reachable = jc.at("grid_reachable").get<bool>();
      for (const auto& f : jc.at("findings")) {
        c.findings.push_back({c.index, f.at("check").get<std::string>(), f.at("detail").get<std::string>()});
      }
      if (jc.contains("curve")) {
        const ClosedCurve curve = curve_from_json(jc.at("curve"));
        if (const auto* fc = std::get_if<FourierCurve>(&curve.form())) c.curve = *fc;
      }
      r.cases.push_back(std::move(c));
    }
    return r;
  });
}

}  // namespace jordan::io
