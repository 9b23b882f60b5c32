#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "polyia/animal.hpp"

namespace polyia {

// The four mutually exclusive branches of the injective concatenation.
enum class ConcatCase : int { Case0 = 0, Case1 = 1, Case2 = 2, Case3 = 3 };

std::string to_string(ConcatCase c);

struct ConcatResult {
  Polyiamond animal;    // |A|+|B| cells, canonical
  ConcatCase case_tag;  // satisfies the table predicates for (animal, ell)
  std::size_t ell;      // size of the first operand
};

// True iff some set of leftmost columns of C holds exactly `ell` cells.
// Equivalently (cells lex-sorted): a column boundary sits after the ell-th
// cell. The witnessing column is unique when it exists.
bool prefix_columns_property(const Polyiamond& c, std::size_t ell);

// True iff the two cells directly above the ell-th cell (lex order) are
// both in C.
bool two_on_top(const Polyiamond& c, std::size_t ell);

// The injection (A,B) -> C of |A|+|B| cells. Requires |B| >= 2; for a
// 1-cell second operand swap the operands instead (the counting bound is
// symmetric). Which branch applies:
//   Case 0: A's rightmost column has an L-cell and B's leftmost column has
//           an R-cell. B is shifted so its lowest leftmost-column R-cell
//           becomes the horizontal right-neighbor of A's topmost
//           rightmost-column L-cell.
//   Case 1: largest(A)=R, smallest(B)=L. B shifted so smallest(B) sits
//           directly above largest(A).
//   Case 2: largest(A)=R, smallest(B)=R. smallest(B) is merged onto
//           largest(A) and an L-cell is added directly below it.
//   Case 3: largest(A)=L, smallest(B)=L. Merge as above; a cell is added
//           directly above the topmost cell of B's (shifted) leftmost
//           column.
// (largest=L, smallest=R) cannot reach the non-0 branch: it implies Case 0.
ConcatResult concat_injective(const Polyiamond& a, const Polyiamond& b);

// Total decision tree over (C, ell); meaningful on the image of
// concat_injective. Case0 if the prefix-columns property holds; else Case1
// if the ell-th cell is R; else Case2 if two_on_top; else Case3.
ConcatCase classify_case(const Polyiamond& c, std::size_t ell);

// Inverse of concat_injective on its image: recovers (A, B) from (C, ell).
// Throws RangeError for ell outside [1, |C|), NotInImageError when C does
// not decode to a valid pair (including ell = |C|-1, where |B| would be 1).
// The reconstruction is certified by re-encoding.
std::pair<Polyiamond, Polyiamond> decode(const Polyiamond& c, std::size_t ell);

// The simple concatenations: every cell of A stays lex-less than every cell
// of B. RL wants head(A)=R, tail(B)=L; the LR variants want head(A)=L,
// tail(B)=R and differ in where smallest(B) lands (above largest(A), or as
// its horizontal right-neighbor).
Polyiamond simple_concat_RL(const Polyiamond& a, const Polyiamond& b);
Polyiamond simple_concat_LR_stack(const Polyiamond& a, const Polyiamond& b);
Polyiamond simple_concat_LR_side(const Polyiamond& a, const Polyiamond& b);

}  // namespace polyia
