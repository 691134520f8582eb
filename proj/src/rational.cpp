#include "pavsec/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <utility>

namespace pavsec {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  reduce();
}

void Rational::reduce() {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw std::invalid_argument("Rational: cannot parse \"" + std::string(whole) + "\"");
  }
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) {
    throw std::invalid_argument("Rational: cannot parse \"" + std::string(whole) + "\"");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw std::invalid_argument("Rational: cannot parse \"" + std::string(whole) + "\"");
    }
  }
  return BigInt(std::string(text));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
  }
  BigInt p = parse_integer(text.substr(0, slash), text);
  BigInt q = parse_integer(text.substr(slash + 1), text);
  return Rational(std::move(p), std::move(q));
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  reduce();
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

double Rational::to_double() const {
  if (num_ == 0) return 0.0;
  const bool negative = num_ < 0;
  // Scale so the integer quotient keeps 64 bits of the fraction, then round once.
  BigInt q = (boost::multiprecision::abs(num_) << 64) / den_;
  const double value = std::ldexp(q.convert_to<double>(), -64);
  return negative ? -value : value;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace pavsec
