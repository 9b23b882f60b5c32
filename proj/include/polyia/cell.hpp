#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "polyia/errors.hpp"

namespace polyia {

// The two triangle types of the lattice. R points right, L points left.
enum class Orientation : std::uint8_t { R, L };

constexpr Orientation flipped(Orientation o) noexcept {
  return o == Orientation::R ? Orientation::L : Orientation::R;
}

constexpr char to_char(Orientation o) noexcept {
  return o == Orientation::R ? 'R' : 'L';
}

// A triangular-lattice cell: column x, position y within the column
// (increasing upward). Orientation is derived from parity, never stored.
// The default member order gives lexicographic comparison: column first,
// then bottom-to-top.
struct Cell {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Orientation orientation(Cell c) noexcept {
  return ((c.x + c.y) & 1) == 0 ? Orientation::R : Orientation::L;
}

// Every cell has exactly three neighbors, all of the opposite orientation:
// the cells above and below in its column, plus one horizontal neighbor
// across the vertical edge (to the left of an R cell, to the right of an L).
constexpr std::array<Cell, 3> neighbors(Cell c) noexcept {
  const int h = orientation(c) == Orientation::R ? -1 : 1;
  return {Cell{c.x, c.y - 1}, Cell{c.x, c.y + 1}, Cell{c.x + h, c.y}};
}

constexpr bool lex_less(Cell a, Cell b) noexcept { return a < b; }

// Lattice translations must keep x+y parity, otherwise the two triangle
// types would swap, which no translation of the tiling does.
inline Cell translate(Cell c, int dx, int dy) {
  if (((dx + dy) & 1) != 0) {
    throw InvalidTranslationError("translate: dx+dy must be even, got (" +
                                  std::to_string(dx) + "," + std::to_string(dy) + ")");
  }
  return {c.x + dx, c.y + dy};
}

// The order-reversing involution (x,y) -> (-x, 1-y). Flips orientation,
// preserves adjacency, and maps the lex-largest cell of any finite set to
// the lex-smallest.
constexpr Cell point_reflect(Cell c) noexcept { return {-c.x, 1 - c.y}; }

inline std::string to_string(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

}  // namespace polyia
