#pragma once

#include <array>
#include <compare>
#include <utility>
#include <vector>

#include "polyia/animal.hpp"
#include "polyia/cell.hpp"

namespace polyia {

// The three translation classes of dual (hexagonal-lattice) edges.
enum class EdgeClass : int { Upward = 0, Horizontal = 1, Downward = 2 };

const char* to_string(EdgeClass e);

// Class of the dual edge between two adjacent cells: an R below an L is
// Upward, an L left of an R is Horizontal, an R above an L is Downward.
// Non-adjacent cells are an ArgumentError.
EdgeClass edge_class(Cell a, Cell b);

struct DualEdge {
  Cell a, b;  // endpoints, a lex-less than b
  EdgeClass cls;
  friend constexpr auto operator<=>(const DualEdge&, const DualEdge&) = default;
};

// The dual graph keeps cell-indexed vertices; hexagonal geometry enters
// only through hex_embedding. points lex-sorted, edges sorted by endpoints.
struct DualGraph {
  std::vector<Cell> points;
  std::vector<DualEdge> edges;
  friend bool operator==(const DualGraph&, const DualGraph&) = default;
};

// Vertices = cells, edges = all adjacent pairs, labeled by edge_class.
DualGraph to_dual(const Polyiamond& p);

// Inverse on graphs produced by to_dual: validates shape (set-ness,
// adjacency, labels, completeness of the edge set, connectivity) and
// rebuilds the polyiamond; anything off is a MalformedDualError. A single
// vertex collapses to the canonical one-cell animal (the dual cannot tell
// the two apart).
Polyiamond from_dual(const DualGraph& g);

// Planar centroid of a cell's triangle under the equilateral embedding;
// figure plumbing only, no exactness contract.
std::pair<double, double> hex_centroid(Cell c);
std::vector<std::pair<double, double>> hex_embedding(const DualGraph& g);

// The triangle's three corners in the same planar coordinates (for SVG).
std::array<std::pair<double, double>, 3> triangle_vertices(Cell c);

}  // namespace polyia
