#include "polyia/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "polyia/dual.hpp"

namespace polyia {
namespace {

constexpr double kScale = 72.0;  // px per lattice unit
constexpr double kPad = 0.35;    // lattice units around the hull

std::string fmt(double v) {
  char buf[32];
  // normalize -0.0000 away for byte-stable output
  std::snprintf(buf, sizeof(buf), "%.4f", v + 0.0 == 0.0 ? 0.0 : v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

const char* stroke_for(EdgeClass e) {
  switch (e) {
    case EdgeClass::Upward: return "#2166ac";
    case EdgeClass::Horizontal: return "#1a7837";
    case EdgeClass::Downward: return "#762a83";
  }
  return "#000000";
}

}  // namespace

std::string render_svg(const Polyiamond& p, const RenderOptions& opt) {
  double xmin = std::numeric_limits<double>::max();
  double xmax = std::numeric_limits<double>::lowest();
  double ymin = xmin, ymax = xmax;
  for (const Cell& c : p.cells()) {
    for (auto [u, v] : triangle_vertices(c)) {
      xmin = std::min(xmin, u);
      xmax = std::max(xmax, u);
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  xmin -= kPad;
  xmax += kPad;
  ymin -= kPad;
  ymax += kPad;

  // SVG y grows downward; flip against the box top.
  auto px = [&](double u) { return (u - xmin) * kScale; };
  auto py = [&](double v) { return (ymax - v) * kScale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt((xmax - xmin) * kScale)
      << "\" height=\"" << fmt((ymax - ymin) * kScale) << "\" viewBox=\"0 0 "
      << fmt((xmax - xmin) * kScale) << " " << fmt((ymax - ymin) * kScale) << "\">\n";

  for (const Cell& c : p.cells()) {
    const auto tri = triangle_vertices(c);
    out << "  <polygon class=\"cell "
        << (orientation(c) == Orientation::R ? "right" : "left") << "\" points=\"";
    for (std::size_t i = 0; i < 3; ++i) {
      if (i) out << " ";
      out << fmt(px(tri[i].first)) << "," << fmt(py(tri[i].second));
    }
    out << "\" fill=\"#f3e9d2\" stroke=\"#4a4a4a\" stroke-width=\"1.5\"/>\n";
  }

  if (opt.dual) {
    const DualGraph g = to_dual(p);
    for (const DualEdge& e : g.edges) {
      const auto [ua, va] = hex_centroid(e.a);
      const auto [ub, vb] = hex_centroid(e.b);
      out << "  <line class=\"dual-edge " << to_string(e.cls) << "\" x1=\"" << fmt(px(ua))
          << "\" y1=\"" << fmt(py(va)) << "\" x2=\"" << fmt(px(ub)) << "\" y2=\""
          << fmt(py(vb)) << "\" stroke=\"" << stroke_for(e.cls) << "\" stroke-width=\"2.5\"/>\n";
    }
    for (const Cell& c : g.points) {
      const auto [u, v] = hex_centroid(c);
      out << "  <circle class=\"dual-point\" cx=\"" << fmt(px(u)) << "\" cy=\"" << fmt(py(v))
          << "\" r=\"4.5\" fill=\"#b2333a\"/>\n";
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace polyia
