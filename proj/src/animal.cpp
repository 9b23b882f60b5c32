#include "polyia/animal.hpp"

#include <algorithm>

#include "polyia/errors.hpp"

namespace polyia {

namespace {

void check_connected(const std::vector<Cell>& sorted) {
  std::vector<char> seen(sorted.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  auto index_of = [&](Cell c) -> std::ptrdiff_t {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
    if (it == sorted.end() || *it != c) return -1;
    return it - sorted.begin();
  };
  while (!stack.empty()) {
    const Cell c = sorted[stack.back()];
    stack.pop_back();
    for (const Cell nb : neighbors(c)) {
      const std::ptrdiff_t j = index_of(nb);
      if (j >= 0 && !seen[j]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(static_cast<std::size_t>(j));
      }
    }
  }
  if (reached != sorted.size()) {
    throw DisconnectedError("polyiamond cells are not edge-connected");
  }
}

}  // namespace

Polyiamond::Polyiamond(std::vector<Cell> raw) : cells_(std::move(raw)) {
  if (cells_.empty()) throw EmptyInputError("polyiamond must have at least one cell");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  check_connected(cells_);
  const Cell root = cells_.front();
  const int dx = -root.x;
  const int dy = (orientation(root) == Orientation::R ? 0 : 1) - root.y;
  if (dx != 0 || dy != 0) {
    for (Cell& c : cells_) c = translate(c, dx, dy);
  }
}

Cell Polyiamond::nth_cell(std::size_t k) const {
  if (k < 1 || k > cells_.size()) {
    throw RangeError("cell index " + std::to_string(k) + " out of range [1," +
                     std::to_string(cells_.size()) + "]");
  }
  return cells_[k - 1];
}

bool Polyiamond::contains(Cell c) const noexcept {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Polyiamond from_cells(std::vector<Cell> raw) { return Polyiamond(std::move(raw)); }

Polyiamond from_cells(std::span<const Cell> raw) {
  return Polyiamond(std::vector<Cell>(raw.begin(), raw.end()));
}

HeadTailClass classify(const Polyiamond& p) {
  return {orientation(p.largest_cell()), orientation(p.smallest_cell())};
}

Polyiamond reflect(const Polyiamond& p) {
  std::vector<Cell> out;
  out.reserve(p.size());
  for (const Cell c : p.cells()) out.push_back(point_reflect(c));
  return Polyiamond(std::move(out));
}

Polyiamond strip_largest_L(const Polyiamond& p) {
  if (p.size() < 2) throw SizeError("strip_largest_L needs at least 2 cells");
  if (orientation(p.largest_cell()) != Orientation::L) {
    throw WrongClassError("strip_largest_L: head type must be L");
  }
  std::vector<Cell> out(p.cells().begin(), p.cells().end() - 1);
  return Polyiamond(std::move(out));
}

Polyiamond add_L_on_top(const Polyiamond& p) {
  if (orientation(p.largest_cell()) != Orientation::R) {
    throw WrongClassError("add_L_on_top: head type must be R");
  }
  std::vector<Cell> out(p.cells());
  const Cell top = p.largest_cell();
  out.push_back({top.x, top.y + 1});
  return Polyiamond(std::move(out));
}

Polyiamond grow_below_smallest(const Polyiamond& p) {
  std::vector<Cell> out(p.cells());
  const Cell bottom = p.smallest_cell();
  out.push_back({bottom.x, bottom.y - 1});
  return Polyiamond(std::move(out));
}

}  // namespace polyia
