#include "seqgraph/svg.hpp"

#include "seqgraph/error.hpp"

#include <cmath>
#include <cstdio>

namespace seqgraph {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Point {
  double x;
  double y;
};

}  // namespace

std::string render_svg(const SequenceGraph& g, const Embedding& e, const SvgStyle& style) {
  if (e.size() != g.size()) {
    throw Error(ErrorCode::DimensionMismatch, "embedding has " + std::to_string(e.size()) + " points, graph has " +
                                                  std::to_string(g.size()) + " vertices");
  }
  if (e.coords.cols() < 2) throw Error(ErrorCode::DimensionMismatch, "embedding needs at least 2 columns");
  const Embedding unit = normalize(e);

  const double half = (style.canvas - 2.0 * style.margin) / 2.0;
  const double centre = style.canvas / 2.0;
  std::vector<Point> pts(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto r = static_cast<Eigen::Index>(v);
    pts[v] = {centre + half * unit.coords(r, 0), centre - half * unit.coords(r, 1)};
  }

  std::string out;
  const std::string size = fmt(style.canvas);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"" + xml_escape(style.background) + "\"/>\n";
  out += "<g fill=\"none\" stroke=\"" + xml_escape(style.edge_stroke) + "\" stroke-width=\"" +
         fmt(style.stroke_width) + "\">\n";
  for (const auto& edge : g.edges()) {
    const Point a = pts[edge.u];
    const Point b = pts[edge.v];
    const std::string head = "<path d=\"M " + fmt(a.x) + " " + fmt(a.y) + " ";
    const std::string tail = fmt(b.x) + " " + fmt(b.y) + "\"/>\n";
    if (edge.multiplicity == 1) {
      out += head + "L " + tail;
      continue;
    }
    // Quadratic control point at twice the bulge along the unit normal.
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len = std::hypot(dx, dy);
    const double nx = len > 0.0 ? -dy / len : 0.0;
    const double ny = len > 0.0 ? dx / len : 1.0;
    const double mx = (a.x + b.x) / 2.0;
    const double my = (a.y + b.y) / 2.0;
    for (const double side : {1.0, -1.0}) {
      const double off = 2.0 * style.double_offset * side;
      out += head + "Q " + fmt(mx + off * nx) + " " + fmt(my + off * ny) + " " + tail;
    }
  }
  out += "</g>\n";
  out += "<g fill=\"" + xml_escape(style.vertex_fill) + "\">\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    out += "<circle cx=\"" + fmt(pts[v].x) + "\" cy=\"" + fmt(pts[v].y) + "\" r=\"" + fmt(style.vertex_radius) +
           "\"/>\n";
  }
  out += "</g>\n";
  if (style.labels) {
    out += "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#000000\">\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
      out += "<text x=\"" + fmt(pts[v].x + style.vertex_radius + 1.0) + "\" y=\"" + fmt(pts[v].y - 1.0) + "\">" +
             xml_escape(g.values()[v].to_string()) + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace seqgraph
