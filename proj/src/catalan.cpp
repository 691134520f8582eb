#include "pavsec/catalan.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

namespace pavsec {

BigInt catalan(unsigned n) {
  static std::mutex lock;
  static std::vector<BigInt> cache{BigInt(1)};  // C_0
  std::scoped_lock guard(lock);
  while (cache.size() <= n) {
    const unsigned k = static_cast<unsigned>(cache.size());
    // C_k = C_{k-1} * 2(2k-1) / (k+1), division exact
    BigInt next = cache.back() * (2 * (2 * k - 1));
    next /= k + 1;
    cache.push_back(std::move(next));
  }
  return cache[n];
}

Rational catalan_ratio(unsigned n) {
  if (n == 0) throw std::invalid_argument("catalan_ratio: requires n >= 1");
  return Rational(BigInt(n) + 1, 2 * (2 * BigInt(n) - 1));
}

double catalan_asymptotic_log(unsigned n) {
  if (n == 0) throw std::invalid_argument("catalan_asymptotic: requires n >= 1");
  return static_cast<double>(n) * std::log(4.0) -
         0.5 * std::log(std::numbers::pi) -
         1.5 * std::log(static_cast<double>(n));
}

double catalan_asymptotic(unsigned n) { return std::exp(catalan_asymptotic_log(n)); }

}  // namespace pavsec
