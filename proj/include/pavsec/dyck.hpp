#pragma once

#include "pavsec/permutation.hpp"

#include <cstdint>
#include <vector>

namespace pavsec {

// Lattice path of +1 (up) and -1 (down) steps, balanced with nonnegative
// prefix sums.
struct DyckPath {
  std::vector<std::int8_t> steps;

  int semilength() const { return static_cast<int>(steps.size() / 2); }
  bool valid() const;
};

// Bijection onto the 321-avoiding class. Every DU valley yields an excedance:
// position = number of downs through the valley's D, value = number of ups
// through the valley's U; the remaining values fill the remaining positions
// in increasing order (the non-excedance part stays sorted, so no 321 can
// form). Rejects malformed paths.
Permutation dyck_to_321(const DyckPath& path);

}  // namespace pavsec
