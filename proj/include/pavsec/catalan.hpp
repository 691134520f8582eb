#pragma once

#include "pavsec/bigint.hpp"
#include "pavsec/rational.hpp"

namespace pavsec {

// C_n, memoized behind a lock so concurrent readers are safe.
BigInt catalan(unsigned n);

// C_{n-1}/C_n reduced, i.e. (n+1)/(2(2n-1)). Requires n >= 1.
Rational catalan_ratio(unsigned n);

// 4^n / (sqrt(pi) n^{3/2}), evaluated in log space. Requires n >= 1. The
// value exceeds double range near n = 510; use the log form past that.
double catalan_asymptotic(unsigned n);
double catalan_asymptotic_log(unsigned n);  // natural log of the same quantity

}  // namespace pavsec
