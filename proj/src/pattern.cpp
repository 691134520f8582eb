#include "pavsec/pattern.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pavsec {

std::string to_string(Pattern eta) {
  switch (eta) {
    case Pattern::p123: return "123";
    case Pattern::p132: return "132";
    case Pattern::p213: return "213";
    case Pattern::p231: return "231";
    case Pattern::p312: return "312";
    case Pattern::p321: return "321";
  }
  throw std::logic_error("to_string: bad Pattern");
}

Pattern pattern_from_string(std::string_view text) {
  for (Pattern eta : all_patterns()) {
    if (text == to_string(eta)) return eta;
  }
  throw std::invalid_argument("pattern_from_string: unknown pattern \"" +
                              std::string(text) + "\"");
}

std::array<int, 3> pattern_entries(Pattern eta) {
  const std::string s = to_string(eta);
  return {s[0] - '0', s[1] - '0', s[2] - '0'};
}

namespace {

// Increasing triple in the viewed sequence.
template <typename View>
bool view_has_123(int n, View val) {
  int best1 = std::numeric_limits<int>::max();  // smallest value so far
  int best2 = std::numeric_limits<int>::max();  // smallest tail of an ascent
  for (int i = 0; i < n; ++i) {
    const int x = val(i);
    if (x > best2) return true;
    if (x > best1) {
      best2 = std::min(best2, x);
    } else {
      best1 = x;
    }
  }
  return false;
}

// 132 occurrence in the viewed sequence: i < j < k with v_i < v_k < v_j.
// Right-to-left scan; the stack holds decreasing candidates for the "3" and
// `middle` is the best available "2" (largest value already dominated from
// its right... popped values all sit right of the current index).
template <typename View>
bool view_has_132(int n, View val) {
  std::vector<int> stack;
  int middle = 0;  // 0 means none; genuine values are >= 1
  for (int i = n - 1; i >= 0; --i) {
    const int x = val(i);
    if (x < middle) return true;
    while (!stack.empty() && stack.back() < x) {
      middle = stack.back();
      stack.pop_back();
    }
    stack.push_back(x);
  }
  return false;
}

}  // namespace

bool contains(const Permutation& sigma, Pattern eta) {
  const int n = sigma.size();
  if (n < 3) return false;
  const auto& v = sigma.entries();
  auto fwd = [&](int i) { return v[static_cast<std::size_t>(i)]; };
  auto bwd = [&](int i) { return v[static_cast<std::size_t>(n - 1 - i)]; };
  auto fwd_flip = [&](int i) { return n + 1 - v[static_cast<std::size_t>(i)]; };
  auto bwd_flip = [&](int i) { return n + 1 - v[static_cast<std::size_t>(n - 1 - i)]; };
  // Reverse and complement carry every pattern onto 123 or 132.
  switch (eta) {
    case Pattern::p123: return view_has_123(n, fwd);
    case Pattern::p321: return view_has_123(n, bwd);
    case Pattern::p132: return view_has_132(n, fwd);
    case Pattern::p231: return view_has_132(n, bwd);
    case Pattern::p312: return view_has_132(n, fwd_flip);
    case Pattern::p213: return view_has_132(n, bwd_flip);
  }
  throw std::logic_error("contains: bad Pattern");
}

bool contains_reference(const Permutation& sigma, const Permutation& eta) {
  const int n = sigma.size();
  const int m = eta.size();
  if (m > n) return false;
  // Backtracking over increasing index choices, checking order-isomorphism
  // of the chosen prefix against eta as we go.
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(m));
  auto consistent = [&](int value) {
    const int k = static_cast<int>(chosen.size());
    for (int t = 0; t < k; ++t) {
      if ((chosen[static_cast<std::size_t>(t)] < value) != (eta[t] < eta[k])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int from) -> bool {
    if (static_cast<int>(chosen.size()) == m) return true;
    for (int i = from; i <= n - (m - static_cast<int>(chosen.size())); ++i) {
      if (!consistent(sigma[i])) continue;
      chosen.push_back(sigma[i]);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

bool contains_reference(const Permutation& sigma, Pattern eta) {
  const auto e = pattern_entries(eta);
  return contains_reference(sigma, Permutation({e[0], e[1], e[2]}));
}

namespace {

template <typename Visit>
void for_each_avoiding(int n, Pattern eta, Visit visit) {
  if (n < 1 || n > 10) {
    throw std::out_of_range("avoidance enumeration is guarded to 1 <= n <= 10");
  }
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    Permutation p = Permutation::trusted(v);
    if (!contains(p, eta)) visit(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

std::vector<Permutation> enumerate_avoiding(int n, Pattern eta) {
  std::vector<Permutation> out;
  for_each_avoiding(n, eta, [&](Permutation p) { out.push_back(std::move(p)); });
  return out;
}

std::uint64_t count_avoiding(int n, Pattern eta) {
  std::uint64_t count = 0;
  for_each_avoiding(n, eta, [&](Permutation) { ++count; });
  return count;
}

}  // namespace pavsec
