#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace pavsec {

// Arbitrary-precision signed integer (sign-magnitude, canonical zero).
using BigInt = boost::multiprecision::cpp_int;

// binom(n, k) by the multiplicative formula; every intermediate division is exact.
BigInt binomial(unsigned n, unsigned k);

// Natural log of a positive BigInt, usable far beyond double range.
double log_big(const BigInt& x);

}  // namespace pavsec
