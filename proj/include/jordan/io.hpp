#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "jordan/connectivity.hpp"
#include "jordan/curve.hpp"
#include "jordan/fuzz.hpp"
#include "jordan/regions.hpp"
#include "jordan/simplifier.hpp"

namespace jordan::io {

using nlohmann::json;

/// Parse errors and schema mismatches raise InvalidArgument.
json read_json(const std::filesystem::path& path);
json parse_json(const std::string& text);
/// Two-space indented, trailing newline.
std::string dump(const json& j);
void write_text(const std::filesystem::path& path, const std::string& text);

json to_json(Point p);
Point point_from_json(const json& j);

/// {"type":"fourier"|"ellipse"|"polyline", ...}; polylines may carry "knots".
json to_json(const ClosedCurve& curve);
ClosedCurve curve_from_json(const json& j);

/// {"vertices":[[x,y],...],"params":[t,...]}
json to_json(const ParamPolygon& poly);
ParamPolygon polygon_from_json(const json& j);

/// ParamPolygon fields plus "steps".
json to_json(const SimplifyResult& result);
std::vector<ReductionStep> steps_from_json(const json& j);

struct Classification {
  Point point;
  double eps = 0.0;
  RegionLabel label = RegionLabel::Exterior;
};
json to_json(const Classification& c);
Classification classification_from_json(const json& j);
RegionLabel label_from_string(const std::string& s);

json to_json(const WitnessReport& w);
WitnessReport witness_from_json(const json& j);

/// {"points":[[x,y],...]}
json to_json(const PathPolyline& path);
PathPolyline path_from_json(const json& j);

/// {"face":f,"raw_vertices":k,"polygon":{...},"origins":["special"|"connector-crossing",...]}
json to_json(const SeparatingPolygon& sep);
SeparatingPolygon separating_from_json(const json& j, Tolerance tau = Tolerance{});

struct FaceDump {
  std::size_t id = 0;
  FaceRole role = FaceRole::InteriorFace;
  double area = 0.0;
  std::vector<Point> boundary;
};

/// {"eps":e,"faces":[{"id","role","area","boundary"},...]}; roles are band,
/// interior-face or exterior.
json subdivision_to_json(const InteriorSubdivision& sub);
std::vector<FaceDump> subdivision_from_json(const json& j);

json to_json(const fuzz::Report& report);
fuzz::Report fuzz_report_from_json(const json& j);

}  // namespace jordan::io
