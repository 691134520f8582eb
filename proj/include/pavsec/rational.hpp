#pragma once

#include "pavsec/bigint.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace pavsec {

// Exact fraction. Invariant: gcd(|num|, den) == 1 and den > 0; zero is 0/1.
// Serializes as "p/q" (always with the slash, so 1 prints as "1/1").
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT: implicit by design
  Rational(long long value) : num_(value), den_(1) {}          // NOLINT
  Rational(BigInt numerator, BigInt denominator);

  static Rational parse(std::string_view text);  // "p/q" or bare integer "p"

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const;
  // Correctly signed, ~64-bit-precision quotient; huge magnitudes saturate.
  double to_double() const;

 private:
  void reduce();
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// abs, handy for gap computations
Rational abs(const Rational& r);

}  // namespace pavsec
