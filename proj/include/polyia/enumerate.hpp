#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "polyia/animal.hpp"

namespace polyia {

// Exact per-size counts, split by the orientation of the lex-largest cell
// (head_R/head_L) and of the lex-smallest cell (tail_L/tail_R).
struct ClassTally {
  unsigned n = 0;
  mpz_class total;
  mpz_class head_R;
  mpz_class head_L;
  mpz_class tail_L;
  mpz_class tail_R;
};

// Streaming every animal materializes them one by one; counting does not.
inline constexpr unsigned kDefaultStreamLimit = 14;

// Tallies for sizes 1..n_max. One depth-limited search per root type; the
// class identities (head_R == tail_L etc.) are re-checked on the result.
std::vector<ClassTally> count_all(unsigned n_max);

// Visits every canonical n-cell polyiamond exactly once, in a fixed
// deterministic order, and returns the visit count. Throws LimitError when
// n exceeds `limit` (counting via count_all has no such cap).
std::uint64_t enumerate_stream(unsigned n, const std::function<void(const Polyiamond&)>& visit,
                               unsigned limit = kDefaultStreamLimit);

// Convenience: collects the stream into a vector.
std::vector<Polyiamond> enumerate_all(unsigned n, unsigned limit = kDefaultStreamLimit);

}  // namespace polyia
