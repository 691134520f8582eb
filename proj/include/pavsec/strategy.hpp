#pragma once

#include "pavsec/permutation.hpp"

#include <optional>
#include <vector>

namespace pavsec {

struct Outcome {
  std::optional<int> selected_position;  // 1-based; empty when nothing beats the prefix
  bool success = false;                  // selected item is the best one
};

// Reject the first `cutoff` items, then select the first later item beating
// every rejected one. cutoff == 0 compares against an empty prefix, so the
// first item is always selected. Requires 0 <= cutoff <= n-1.
Outcome run_strategy(const Permutation& sigma, int cutoff);

// Entry k-1 is true iff item k is a left-to-right maximum (the first always is).
std::vector<bool> record_indicators(const Permutation& sigma);

}  // namespace pavsec
