#include "pavsec/bigint.hpp"

#include <cmath>
#include <numbers>

namespace pavsec {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r equals binom(n-k+i, i) after each step
  }
  return r;
}

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_big: argument must be positive");
  const unsigned bits = boost::multiprecision::msb(x);  // floor(log2 x)
  if (bits <= 62) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 62;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::numbers::ln2;
}

}  // namespace pavsec
