#include "polyia/concat.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyia/cell.hpp"
#include "polyia/errors.hpp"

namespace polyia {
namespace {

// Topmost L-cell in A's rightmost column, if any. Cells are lex-sorted, so
// the rightmost column is the suffix run sharing back().x.
std::optional<Cell> top_L_of_rightmost_column(const Polyiamond& a) {
  const auto& cs = a.cells();
  const int xmax = cs.back().x;
  for (auto it = cs.rbegin(); it != cs.rend() && it->x == xmax; ++it)
    if (orientation(*it) == Orientation::L) return *it;
  return std::nullopt;
}

// Bottom-most R-cell in B's leftmost column, if any.
std::optional<Cell> bottom_R_of_leftmost_column(const Polyiamond& b) {
  const auto& cs = b.cells();
  const int xmin = cs.front().x;
  for (auto it = cs.begin(); it != cs.end() && it->x == xmin; ++it)
    if (orientation(*it) == Orientation::R) return *it;
  return std::nullopt;
}

// A's cells plus B's cells shifted so that `from` (a cell of B) lands on
// `to`. Distinctness is the caller's obligation; a collision would change
// the size and is caught there.
std::vector<Cell> join(const Polyiamond& a, const Polyiamond& b, Cell from, Cell to,
                       bool skip_from = false) {
  const int dx = to.x - from.x;
  const int dy = to.y - from.y;
  std::vector<Cell> cells(a.cells().begin(), a.cells().end());
  cells.reserve(a.size() + b.size() + 1);
  for (Cell c : b.cells()) {
    if (skip_from && c == from) continue;
    cells.push_back(translate(c, dx, dy));
  }
  return cells;
}

Polyiamond build(std::vector<Cell> cells, std::size_t want) {
  Polyiamond p = from_cells(std::move(cells));
  if (p.size() != want) throw std::logic_error("concat: operand cells were not disjoint");
  return p;
}

}  // namespace

std::string to_string(ConcatCase c) { return "Case" + std::to_string(static_cast<int>(c)); }

bool prefix_columns_property(const Polyiamond& c, std::size_t ell) {
  if (ell < 1 || ell >= c.size())
    throw RangeError("prefix_columns_property: ell must satisfy 1 <= ell < |C|");
  // Column counts accumulate strictly, so "some leftmost columns hold
  // exactly ell cells" iff a column boundary follows the ell-th cell.
  return c.cells()[ell - 1].x != c.cells()[ell].x;
}

bool two_on_top(const Polyiamond& c, std::size_t ell) {
  const Cell base = c.nth_cell(ell);  // range-checks ell
  return c.contains(Cell{base.x, base.y + 1}) && c.contains(Cell{base.x, base.y + 2});
}

ConcatResult concat_injective(const Polyiamond& a, const Polyiamond& b) {
  if (b.size() < 2)
    throw OperandOrderError(
        "concat_injective: second operand must have at least 2 cells; swap the operands");
  const std::size_t ell = a.size();
  const std::size_t n = ell + b.size();

  const auto a_top_l = top_L_of_rightmost_column(a);
  const auto b_bot_r = bottom_R_of_leftmost_column(b);
  if (a_top_l && b_bot_r) {
    // Case 0: B's column interval starts right of A's, no overlap.
    Cell target{a_top_l->x + 1, a_top_l->y};
    return {build(join(a, b, *b_bot_r, target), n), ConcatCase::Case0, ell};
  }

  const Cell p = a.largest_cell();
  const Cell q = b.smallest_cell();
  const bool p_r = orientation(p) == Orientation::R;
  const bool q_r = orientation(q) == Orientation::R;

  if (p_r && !q_r) {
    // Case 1: stack B on top of P(A).
    return {build(join(a, b, q, Cell{p.x, p.y + 1}), n), ConcatCase::Case1, ell};
  }
  if (p_r && q_r) {
    // Case 2: merge Q(B) onto P(A), add the L-cell below. The slot below P
    // is free since the Case-0 test already ruled out an L in A's rightmost
    // column, and the cell above Q belongs to B by connectivity.
    if (!b.contains(Cell{q.x, q.y + 1}))
      throw std::logic_error("concat_injective: cell above smallest(B) missing");
    std::vector<Cell> cells = join(a, b, q, p, /*skip_from=*/true);
    cells.push_back(Cell{p.x, p.y - 1});
    return {build(std::move(cells), n), ConcatCase::Case2, ell};
  }
  if (!p_r && !q_r) {
    // Case 3: merge, then add on top of the merged column of B. Not-Case-0
    // with q = L means B's leftmost column is all-L, which is what keeps
    // two_on_top false on the result.
    std::vector<Cell> cells = join(a, b, q, p, /*skip_from=*/true);
    int ytop = p.y;
    for (const Cell& c : b.cells()) {
      if (c.x != q.x) break;  // leftmost column is a sorted prefix run
      ytop = std::max(ytop, c.y + (p.y - q.y));
    }
    cells.push_back(Cell{p.x, ytop + 1});
    return {build(std::move(cells), n), ConcatCase::Case3, ell};
  }
  // largest(A)=L puts an L in A's rightmost column and smallest(B)=R an R
  // in B's leftmost one — that pair is Case 0 by definition.
  throw std::logic_error("concat_injective: unreachable case split");
}

ConcatCase classify_case(const Polyiamond& c, std::size_t ell) {
  if (prefix_columns_property(c, ell)) return ConcatCase::Case0;
  if (orientation(c.nth_cell(ell)) == Orientation::R) return ConcatCase::Case1;
  if (two_on_top(c, ell)) return ConcatCase::Case2;
  return ConcatCase::Case3;
}

std::pair<Polyiamond, Polyiamond> decode(const Polyiamond& c, std::size_t ell) {
  const std::size_t n = c.size();
  if (ell < 1 || ell >= n) throw RangeError("decode: ell must satisfy 1 <= ell < |C|");
  if (n - ell < 2)
    throw NotInImageError("decode: the second operand would have fewer than 2 cells");

  const auto& cs = c.cells();
  std::vector<Cell> ca;
  std::vector<Cell> cb;
  switch (classify_case(c, ell)) {
    case ConcatCase::Case0:
    case ConcatCase::Case1:
      // Split at the ell-th cell: a column boundary in Case 0, P|Q in Case 1.
      ca.assign(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(ell));
      cb.assign(cs.begin() + static_cast<std::ptrdiff_t>(ell), cs.end());
      break;
    case ConcatCase::Case2: {
      const Cell added = cs[ell - 1];
      const Cell merged = cs[ell];
      if (merged.x != added.x || merged.y != added.y + 1)
        throw NotInImageError("decode: no merged cell directly above the added one");
      ca.assign(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(ell - 1));
      ca.push_back(merged);
      cb.assign(cs.begin() + static_cast<std::ptrdiff_t>(ell), cs.end());
      break;
    }
    case ConcatCase::Case3: {
      const Cell merged = cs[ell - 1];
      ca.assign(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(ell));
      // Added cell: topmost of the remaining cells' leftmost column — the
      // end of the sorted run opening the remainder.
      std::size_t j = ell;
      while (j + 1 < n && cs[j + 1].x == cs[ell].x) ++j;
      cb.push_back(merged);
      for (std::size_t i = ell; i < n; ++i)
        if (i != j) cb.push_back(cs[i]);
      break;
    }
  }

  try {
    Polyiamond a = from_cells(std::move(ca));
    Polyiamond b = from_cells(std::move(cb));
    // Certify by re-encoding; anything not in the image fails here.
    if (concat_injective(a, b).animal != c)
      throw NotInImageError("decode: reconstruction does not re-encode to the input");
    return {std::move(a), std::move(b)};
  } catch (const DisconnectedError&) {
    throw NotInImageError("decode: reconstructed operand is disconnected");
  }
}

namespace {

Polyiamond simple_concat(const Polyiamond& a, const Polyiamond& b, Orientation head_a,
                         Orientation tail_b, Cell target, const char* name) {
  if (classify(a).head != head_a)
    throw WrongClassError(std::string(name) + ": first operand has the wrong head class");
  if (classify(b).tail != tail_b)
    throw WrongClassError(std::string(name) + ": second operand has the wrong tail class");
  return build(join(a, b, b.smallest_cell(), target), a.size() + b.size());
}

}  // namespace

Polyiamond simple_concat_RL(const Polyiamond& a, const Polyiamond& b) {
  const Cell p = a.largest_cell();
  return simple_concat(a, b, Orientation::R, Orientation::L, Cell{p.x, p.y + 1},
                       "simple_concat_RL");
}

Polyiamond simple_concat_LR_stack(const Polyiamond& a, const Polyiamond& b) {
  const Cell p = a.largest_cell();
  return simple_concat(a, b, Orientation::L, Orientation::R, Cell{p.x, p.y + 1},
                       "simple_concat_LR_stack");
}

Polyiamond simple_concat_LR_side(const Polyiamond& a, const Polyiamond& b) {
  const Cell p = a.largest_cell();
  return simple_concat(a, b, Orientation::L, Orientation::R, Cell{p.x + 1, p.y},
                       "simple_concat_LR_side");
}

}  // namespace polyia
