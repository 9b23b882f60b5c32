#include "polyia/dual.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "polyia/errors.hpp"

namespace polyia {
namespace {

bool adjacent(Cell a, Cell b) {
  for (Cell nb : neighbors(a))
    if (nb == b) return true;
  return false;
}

constexpr double kRt3Half = 0.8660254037844386;  // √3/2

std::pair<double, double> to_plane(double u, double v) { return {u * kRt3Half, v / 2.0}; }

}  // namespace

const char* to_string(EdgeClass e) {
  switch (e) {
    case EdgeClass::Upward: return "upward";
    case EdgeClass::Horizontal: return "horizontal";
    case EdgeClass::Downward: return "downward";
  }
  return "?";
}

EdgeClass edge_class(Cell a, Cell b) {
  if (!adjacent(a, b)) throw ArgumentError("edge_class: cells are not adjacent");
  if (a.x == b.x) {
    const Cell lower = a.y < b.y ? a : b;
    return orientation(lower) == Orientation::R ? EdgeClass::Upward : EdgeClass::Downward;
  }
  // adjacent horizontal pairs always read L (left) | R (right)
  return EdgeClass::Horizontal;
}

DualGraph to_dual(const Polyiamond& p) {
  DualGraph g;
  g.points = p.cells();
  for (const Cell& c : g.points) {
    // up-neighbor sorts before the side-neighbor, keeping edges ordered
    for (Cell nb : {Cell{c.x, c.y + 1}, Cell{c.x + (orientation(c) == Orientation::R ? -1 : 1), c.y}}) {
      if (lex_less(c, nb) && p.contains(nb)) g.edges.push_back({c, nb, edge_class(c, nb)});
    }
  }
  return g;
}

Polyiamond from_dual(const DualGraph& g) {
  if (g.points.empty()) throw MalformedDualError("from_dual: no vertices");
  if (g.points.size() == 1) {
    if (!g.edges.empty()) throw MalformedDualError("from_dual: a single vertex admits no edge");
    // Both one-cell animals share this dual; the R representative is
    // canonical.
    return from_cells({Cell{0, 0}});
  }

  std::vector<Cell> pts = g.points;
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw MalformedDualError("from_dual: duplicate vertex");
  auto has_point = [&pts](Cell c) { return std::binary_search(pts.begin(), pts.end(), c); };

  std::vector<std::pair<Cell, Cell>> seen;
  for (const DualEdge& e : g.edges) {
    if (!has_point(e.a) || !has_point(e.b))
      throw MalformedDualError("from_dual: edge endpoint is not a vertex");
    if (!lex_less(e.a, e.b)) throw MalformedDualError("from_dual: edge endpoints out of order");
    if (!adjacent(e.a, e.b)) throw MalformedDualError("from_dual: edge joins non-adjacent cells");
    if (edge_class(e.a, e.b) != e.cls)
      throw MalformedDualError("from_dual: edge label inconsistent with its endpoints");
    seen.emplace_back(e.a, e.b);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw MalformedDualError("from_dual: duplicate edge");

  // Every adjacent vertex pair must be present as an edge.
  std::size_t adjacencies = 0;
  for (const Cell& c : pts)
    for (Cell nb : neighbors(c))
      if (lex_less(c, nb) && has_point(nb)) ++adjacencies;
  if (adjacencies != seen.size())
    throw MalformedDualError("from_dual: edge set does not cover all adjacencies");

  try {
    return from_cells(pts);
  } catch (const DisconnectedError&) {
    throw MalformedDualError("from_dual: vertices are not connected");
  }
}

std::pair<double, double> hex_centroid(Cell c) {
  // Centroid of the triangle below, in lattice-vertex coordinates.
  const double u = c.x + (orientation(c) == Orientation::R ? 1.0 : 2.0) / 3.0;
  const double v = c.y + 1.0;
  return to_plane(u, v);
}

std::vector<std::pair<double, double>> hex_embedding(const DualGraph& g) {
  std::vector<std::pair<double, double>> out;
  out.reserve(g.points.size());
  for (const Cell& c : g.points) out.push_back(hex_centroid(c));
  return out;
}

std::array<std::pair<double, double>, 3> triangle_vertices(Cell c) {
  if (orientation(c) == Orientation::R) {
    return {to_plane(c.x, c.y), to_plane(c.x, c.y + 2), to_plane(c.x + 1, c.y + 1)};
  }
  return {to_plane(c.x, c.y + 1), to_plane(c.x + 1, c.y), to_plane(c.x + 1, c.y + 2)};
}

}  // namespace polyia
