#pragma once

#include <boost/math/distributions/chi_squared.hpp>

#include <cstdint>
#include <vector>

namespace stats {

// Pearson statistic against given cell probabilities.
inline double chi_square(const std::vector<std::uint64_t>& counts,
                         const std::vector<double>& probs, std::uint64_t total) {
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = probs[i] * static_cast<double>(total);
    const double diff = static_cast<double>(counts[i]) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

inline double chi_square_uniform(const std::vector<std::uint64_t>& counts,
                                 std::uint64_t total) {
  const std::vector<double> probs(counts.size(), 1.0 / static_cast<double>(counts.size()));
  return chi_square(counts, probs, total);
}

inline double chi_square_threshold(unsigned cells, double level = 0.999) {
  boost::math::chi_squared dist(static_cast<double>(cells - 1));
  return boost::math::quantile(dist, level);
}

// Lexicographic rank of a permutation of 1..n, for binning samples.
inline std::size_t lex_rank(const std::vector<int>& v) {
  std::size_t rank = 0;
  std::size_t factorial = 1;
  const std::size_t n = v.size();
  for (std::size_t i = n; i-- > 0;) {
    std::size_t smaller_later = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v[j] < v[i]) ++smaller_later;
    }
    rank += smaller_later * factorial;
    factorial *= n - i;
  }
  return rank;
}

}  // namespace stats
