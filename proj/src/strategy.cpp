#include "pavsec/strategy.hpp"

#include <stdexcept>

namespace pavsec {

Outcome run_strategy(const Permutation& sigma, int cutoff) {
  const int n = sigma.size();
  if (cutoff < 0 || cutoff > n - 1) {
    throw std::invalid_argument("run_strategy: cutoff must be in 0..n-1");
  }
  int prefix_best = 0;  // empty prefix ranks below every item
  for (int i = 0; i < cutoff; ++i) prefix_best = std::max(prefix_best, sigma[i]);
  for (int i = cutoff; i < n; ++i) {
    if (sigma[i] > prefix_best) {
      return Outcome{i + 1, sigma[i] == n};
    }
  }
  return Outcome{std::nullopt, false};
}

std::vector<bool> record_indicators(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<bool> records(static_cast<std::size_t>(n), false);
  int best = 0;
  for (int i = 0; i < n; ++i) {
    if (sigma[i] > best) {
      best = sigma[i];
      records[static_cast<std::size_t>(i)] = true;
    }
  }
  return records;
}

}  // namespace pavsec
