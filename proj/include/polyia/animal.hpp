#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyia/cell.hpp"

namespace polyia {

// A fixed polyiamond in canonical translate: a non-empty, edge-connected
// cell set, stored lex-sorted, translated so the lex-smallest cell sits at
// (0,0) if it is an R cell and at (0,1) if it is an L cell. Parity makes
// that root position unique, so equal animals compare equal as values.
class Polyiamond {
 public:
  // Validates (non-empty, connected) and normalizes. Duplicate cells in the
  // input collapse, set-style.
  explicit Polyiamond(std::vector<Cell> raw);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }

  Cell smallest_cell() const noexcept { return cells_.front(); }
  Cell largest_cell() const noexcept { return cells_.back(); }

  // k is 1-indexed in lex order; throws RangeError outside [1, size()].
  Cell nth_cell(std::size_t k) const;

  bool contains(Cell c) const noexcept;

  friend bool operator==(const Polyiamond&, const Polyiamond&) = default;
  friend auto operator<=>(const Polyiamond&, const Polyiamond&) = default;

 private:
  std::vector<Cell> cells_;
};

Polyiamond from_cells(std::vector<Cell> raw);
Polyiamond from_cells(std::span<const Cell> raw);

// Orientations of the lex-largest (head) and lex-smallest (tail) cells.
struct HeadTailClass {
  Orientation head;
  Orientation tail;
  friend bool operator==(const HeadTailClass&, const HeadTailClass&) = default;
};

HeadTailClass classify(const Polyiamond& p);

// Point-reflects every cell and renormalizes. Size-preserving involution;
// swaps head type R with tail type L and head L with tail R.
Polyiamond reflect(const Polyiamond& p);

// Removes the lex-largest cell of an L-headed animal with at least 2 cells.
// That cell's only neighbor in the animal is the R cell directly below it,
// so the remainder is connected and R-headed. Inverse of add_L_on_top.
Polyiamond strip_largest_L(const Polyiamond& p);

// Adds the L cell directly above the lex-largest cell of an R-headed animal.
Polyiamond add_L_on_top(const Polyiamond& p);

// Adds the (guaranteed empty) cell directly below the lex-smallest cell.
// Injective on canonical forms of a fixed size; preserves head type.
Polyiamond grow_below_smallest(const Polyiamond& p);

}  // namespace polyia
