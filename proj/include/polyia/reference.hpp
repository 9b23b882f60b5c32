#pragma once

#include <array>
#include <cstdint>

namespace polyia {

// Published counts of fixed polyiamonds by cell count (OEIS A001420,
// n = 1..14); the verify table suite and the tests check enumeration
// against these.
inline constexpr std::array<std::uint64_t, 14> kKnownCounts = {
    2, 3, 6, 14, 36, 94, 250, 675, 1838, 5053, 14016, 39169, 110194, 311751,
};

}  // namespace polyia
