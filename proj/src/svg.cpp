#include "jordan/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "jordan/error.hpp"

namespace jordan {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string point_list(const std::vector<Point>& pts) {
  std::string out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) out += ' ';
    out += num(pts[k].x) + "," + num(pts[k].y);
  }
  return out;
}

void grow(Point& lo, Point& hi, const std::vector<Point>& pts) {
  for (const Point& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
  std::vector<Point> fine;
  if (scene.curve) {
    const std::size_t m = std::max<std::size_t>(3, scene.curve_samples);
    for (std::size_t k = 0; k < m; ++k) fine.push_back(scene.curve->evaluate(static_cast<double>(k) / static_cast<double>(m)));
  }
  const std::vector<Point>& frame = !fine.empty() ? fine : scene.polygon ? scene.polygon->vertices() : std::vector<Point>{};
  if (frame.empty()) throw InvalidArgument("render_svg needs a curve or a polygon");
  Point lo = frame[0];
  Point hi = lo;
  grow(lo, hi, frame);
  const double w0 = std::max(hi.x - lo.x, 1e-12);
  const double h0 = std::max(hi.y - lo.y, 1e-12);
  lo = {lo.x - 0.1 * w0, lo.y - 0.1 * h0};
  hi = {hi.x + 0.1 * w0, hi.y + 0.1 * h0};
  const double w = hi.x - lo.x;
  const double h = hi.y - lo.y;
  const double stroke = 0.002 * std::max(w, h);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(lo.x) + " " + num(lo.y) + " " + num(w) + " " +
         num(h) + "\" width=\"800\" height=\"" + num(800.0 * h / w) + "\">\n";
  // Flip about the box's horizontal midline so +y points up.
  out += "<g transform=\"matrix(1 0 0 -1 0 " + num(lo.y + hi.y) + ")\" fill=\"none\" stroke-linejoin=\"round\">\n";
  if (scene.polygon && scene.eps > 0.0) {
    out += "<g id=\"band\"><polygon points=\"" + point_list(scene.polygon->vertices()) +
           "\" stroke=\"#f4c27a\" stroke-opacity=\"0.6\" stroke-width=\"" + num(2.0 * scene.eps) + "\"/></g>\n";
  }
  if (!fine.empty()) {
    out += "<g id=\"curve\"><polygon points=\"" + point_list(fine) + "\" stroke=\"#1f5fa8\" stroke-width=\"" +
           num(stroke) + "\"/></g>\n";
  }
  if (scene.polygon) {
    out += "<g id=\"polygon\"><polygon points=\"" + point_list(scene.polygon->vertices()) +
           "\" stroke=\"#222222\" stroke-width=\"" + num(0.6 * stroke) + "\"/></g>\n";
  }
  if (scene.separating) {
    out += "<g id=\"separating\"><polygon points=\"" + point_list(scene.separating->vertices()) +
           "\" stroke=\"#2a9d4b\" stroke-width=\"" + num(stroke) + "\"/></g>\n";
  }
  if (scene.path) {
    out += "<g id=\"path\"><polyline points=\"" + point_list(scene.path->points) + "\" stroke=\"#c0392b\" stroke-width=\"" +
           num(1.5 * stroke) + "\"/></g>\n";
  }
  if (scene.witness) {
    const WitnessReport& wr = *scene.witness;
    out += "<g id=\"witness\">";
    out += "<line x1=\"" + num(wr.gamma_start.x) + "\" y1=\"" + num(wr.gamma_start.y) + "\" x2=\"" + num(wr.gamma_end.x) +
           "\" y2=\"" + num(wr.gamma_end.y) + "\" stroke=\"#888888\" stroke-dasharray=\"" + num(4 * stroke) +
           "\" stroke-width=\"" + num(0.6 * stroke) + "\"/>";
    out += "<line x1=\"" + num(wr.a.x) + "\" y1=\"" + num(wr.a.y) + "\" x2=\"" + num(wr.b.x) + "\" y2=\"" + num(wr.b.y) +
           "\" stroke=\"#888888\" stroke-width=\"" + num(0.6 * stroke) + "\"/>";
    const std::pair<const char*, Point> marks[] = {{"A", wr.a}, {"B", wr.b}, {"C", wr.c}, {"D", wr.d}, {"E", wr.e}};
    for (const auto& [label, p] : marks) {
      out += "<circle id=\"witness-" + std::string(label) + "\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" +
             num(3 * stroke) + "\" fill=\"#8e44ad\" stroke=\"none\"/>";
    }
    out += "</g>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace jordan
