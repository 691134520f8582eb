#pragma once

#include "pavsec/permutation.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pavsec {

enum class Pattern { p123, p132, p213, p231, p312, p321 };

constexpr std::array<Pattern, 6> all_patterns() {
  return {Pattern::p123, Pattern::p132, Pattern::p213,
          Pattern::p231, Pattern::p312, Pattern::p321};
}

std::string to_string(Pattern eta);
Pattern pattern_from_string(std::string_view text);  // "231" etc.
std::array<int, 3> pattern_entries(Pattern eta);

// Linear-time containment check (per-pattern fast path).
bool contains(const Permutation& sigma, Pattern eta);

// Reference scan over all index triples (and general patterns in one-line
// notation). Kept independent of the fast path on purpose.
bool contains_reference(const Permutation& sigma, const Permutation& eta);
bool contains_reference(const Permutation& sigma, Pattern eta);

// All eta-avoiding permutations of [n] in lexicographic order. Guarded to
// n <= 10; larger classes must be sampled instead.
std::vector<Permutation> enumerate_avoiding(int n, Pattern eta);

// Same filter without materializing the class.
std::uint64_t count_avoiding(int n, Pattern eta);

}  // namespace pavsec
