#include "polyia/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "polyia/cell.hpp"
#include "polyia/errors.hpp"

namespace polyia {
namespace {

// Redelmeier's transfer-free search, specialized to the triangular lattice.
//
// A run is rooted at a fixed cell r and counts exactly the animals whose
// lex-smallest cell is r; restricting growth to cells lex-greater than r
// makes that so. Two runs — r = (0,0) (a right triangle) and r = (0,1)
// (a left one) — cover both canonical roots, so together they count every
// animal exactly once.
//
// The grid: reachable cells satisfy x in [0, n) and |y - r.y| < n, because
// each step changes x or y by one and x never drops below the root column
// (cells with x < 0 are lex-smaller than r). Cells are FREE until they
// become reachable-but-untried (SEEN) or part of the current animal
// (OCCUPIED). SEEN persists for the rest of the enclosing frame, which is
// what prevents the same animal from being generated along two paths.
class Searcher {
 public:
  Searcher(Cell root, unsigned n_max, const std::function<void(const Polyiamond&)>* visit,
           unsigned visit_size)
      : root_(root),
        n_max_(n_max),
        visit_(visit),
        visit_size_(visit_size),
        height_(2 * n_max - 1),
        y_lo_(root.y - static_cast<int>(n_max) + 1),
        state_(static_cast<std::size_t>(n_max) * height_, FREE),
        tally_total_(n_max + 1, 0),
        tally_head_R_(n_max + 1, 0) {
    stack_.reserve(4 * n_max);
    occupied_.reserve(n_max);
    max_stack_.reserve(n_max + 1);
  }

  void run() {
    mark(root_, SEEN);
    stack_.push_back(root_);
    max_stack_.push_back(root_);
    dfs(0);
  }

  // visit counter (only meaningful when a visitor was supplied)
  std::uint64_t visits() const { return visits_; }

  const std::vector<std::uint64_t>& totals() const { return tally_total_; }
  const std::vector<std::uint64_t>& head_R() const { return tally_head_R_; }

 private:
  enum : unsigned char { FREE = 0, SEEN = 1, OCCUPIED = 2 };

  bool in_grid(Cell c) const {
    return c.x >= 0 && c.x < static_cast<int>(n_max_) && c.y >= y_lo_ &&
           c.y < y_lo_ + static_cast<int>(height_);
  }

  unsigned char& at(Cell c) {
    return state_[static_cast<std::size_t>(c.x) * height_ + static_cast<std::size_t>(c.y - y_lo_)];
  }

  void mark(Cell c, unsigned char s) { at(c) = s; }

  void report() {
    const unsigned sz = static_cast<unsigned>(occupied_.size());
    ++tally_total_[sz];
    if (orientation(max_stack_.back()) == Orientation::R) ++tally_head_R_[sz];
    if (visit_ && sz == visit_size_) {
      ++visits_;
      (*visit_)(Polyiamond(occupied_));
    }
  }

  void dfs(std::size_t lo) {
    const std::size_t hi = stack_.size();
    for (std::size_t i = lo; i < hi; ++i) {
      const Cell c = stack_[i];
      occupied_.push_back(c);
      at(c) = OCCUPIED;
      max_stack_.push_back(std::max(max_stack_.back(), c));
      report();

      if (occupied_.size() < n_max_) {
        // Push the untried free neighbours, lex-sorted so the visit order
        // is a function of the shape alone.
        std::array<Cell, 3> fresh{};
        std::size_t n_fresh = 0;
        for (Cell nb : neighbors(c)) {
          if (!lex_less(root_, nb) || !in_grid(nb)) continue;
          if (at(nb) != FREE) continue;
          at(nb) = SEEN;
          fresh[n_fresh++] = nb;
        }
        std::sort(fresh.begin(), fresh.begin() + n_fresh);
        for (std::size_t k = 0; k < n_fresh; ++k) stack_.push_back(fresh[k]);

        dfs(i + 1);

        for (std::size_t k = 0; k < n_fresh; ++k) {
          stack_.pop_back();
          at(fresh[n_fresh - 1 - k]) = FREE;
        }
      }

      max_stack_.pop_back();
      at(c) = SEEN;  // stays untried-but-burned for the rest of this frame
      occupied_.pop_back();
    }
  }

  Cell root_;
  unsigned n_max_;
  const std::function<void(const Polyiamond&)>* visit_;
  unsigned visit_size_;
  unsigned height_;
  int y_lo_;
  std::vector<unsigned char> state_;
  std::vector<Cell> stack_;      // untried reachable cells, frames share it
  std::vector<Cell> occupied_;   // current animal, in insertion order
  std::vector<Cell> max_stack_;  // running lex-max of occupied_ (+ root sentinel)
  std::vector<std::uint64_t> tally_total_;
  std::vector<std::uint64_t> tally_head_R_;
  std::uint64_t visits_ = 0;
};

}  // namespace

std::vector<ClassTally> count_all(unsigned n_max) {
  if (n_max == 0) throw RangeError("count_all: n_max must be positive");

  // Run R-rooted then L-rooted. Roots (0,0) and (0,1): every canonical
  // animal starts at exactly one of the two.
  Searcher run_r(Cell{0, 0}, n_max, nullptr, 0);
  run_r.run();
  Searcher run_l(Cell{0, 1}, n_max, nullptr, 0);
  run_l.run();

  std::vector<ClassTally> out(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    ClassTally& t = out[n - 1];
    t.n = n;
    const std::uint64_t r_total = run_r.totals()[n];
    const std::uint64_t l_total = run_l.totals()[n];
    t.total = mpz_class(r_total) + mpz_class(l_total);
    t.head_R = mpz_class(run_r.head_R()[n]) + mpz_class(run_l.head_R()[n]);
    t.head_L = t.total - t.head_R;
    // The root cell is the lex-smallest, so the run determines the tail.
    t.tail_R = mpz_class(r_total);
    t.tail_L = mpz_class(l_total);

    if (t.head_R + t.head_L != t.total || t.head_R != t.tail_L || t.head_L != t.tail_R)
      throw std::logic_error("count_all: class identities violated");
  }
  return out;
}

std::uint64_t enumerate_stream(unsigned n, const std::function<void(const Polyiamond&)>& visit,
                               unsigned limit) {
  if (n == 0) throw RangeError("enumerate_stream: n must be positive");
  if (n > limit) throw LimitError("enumerate_stream: n exceeds the streaming limit");

  std::uint64_t count = 0;
  Searcher run_r(Cell{0, 0}, n, &visit, n);
  run_r.run();
  count += run_r.visits();
  Searcher run_l(Cell{0, 1}, n, &visit, n);
  run_l.run();
  count += run_l.visits();
  return count;
}

std::vector<Polyiamond> enumerate_all(unsigned n, unsigned limit) {
  std::vector<Polyiamond> out;
  enumerate_stream(n, [&out](const Polyiamond& p) { out.push_back(p); }, limit);
  return out;
}

}  // namespace polyia
