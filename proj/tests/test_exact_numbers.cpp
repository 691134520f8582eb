#include "pavsec/bigint.hpp"
#include "pavsec/catalan.hpp"
#include "pavsec/rational.hpp"
#include "pavsec/rng.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <thread>

using namespace pavsec;

TEST_CASE("catalan matches small frozen values") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(2) == 2);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(5) == 42);
  CHECK(catalan(10) == 16796);
}

TEST_CASE("catalan agrees with the convolution recurrence up to 200") {
  const auto oracle = oracle::catalan_convolution(200);
  for (unsigned n = 0; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(catalan(n) == oracle[n]);
  }
}

TEST_CASE("catalan times n+1 is the central binomial coefficient") {
  for (unsigned n = 1; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(catalan(n) * (n + 1) == binomial(2 * n, n));
  }
}

TEST_CASE("binomial agrees with the Pascal triangle") {
  const auto row = oracle::pascal_row(25);
  for (unsigned k = 0; k <= 25; ++k) {
    CAPTURE(k);
    CHECK(binomial(25, k) == row[k]);
  }
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 7) == 0);
}

TEST_CASE("concurrent catalan readers see consistent values") {
  const BigInt expected = catalan(400);
  std::vector<std::thread> pool;
  std::vector<BigInt> results(4);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&results, t] { results[static_cast<std::size_t>(t)] = catalan(400 + static_cast<unsigned>(t)); });
  }
  for (auto& th : pool) th.join();
  CHECK(results[0] == expected);
  for (int t = 1; t < 4; ++t) {
    CHECK(results[static_cast<std::size_t>(t)] ==
          oracle::catalan_convolution(400 + static_cast<unsigned>(t)).back());
  }
}

TEST_CASE("catalan_ratio frozen values and formula") {
  CHECK(catalan_ratio(1) == Rational(1));
  CHECK(catalan_ratio(1).str() == "1/1");
  CHECK(catalan_ratio(3) == Rational(2, 5));
  CHECK(catalan_ratio(8) == Rational(3, 10));
  CHECK_THROWS_AS(catalan_ratio(0), std::invalid_argument);
  for (unsigned n = 1; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(catalan_ratio(n) == Rational(catalan(n - 1), catalan(n)));
  }
}

TEST_CASE("catalan_ratio strictly decreases and stays above 1/4") {
  Rational prev = catalan_ratio(1);
  const Rational quarter(1, 4);
  CHECK(prev > quarter);
  for (unsigned n = 2; n <= 200; ++n) {
    const Rational r = catalan_ratio(n);
    CAPTURE(n);
    CHECK(r < prev);
    CHECK(r > quarter);
    prev = r;
  }
}

TEST_CASE("catalan_asymptotic frozen values") {
  CHECK(catalan_asymptotic(1) == doctest::Approx(2.2568).epsilon(1e-4));
  CHECK(catalan_asymptotic(10) == doctest::Approx(18708.0).epsilon(1e-4));
  CHECK_THROWS_AS(catalan_asymptotic(0), std::invalid_argument);
}

TEST_CASE("catalan_asymptotic approaches the exact value") {
  auto accuracy = [](unsigned n) {
    return std::exp(log_big(catalan(n)) - catalan_asymptotic_log(n));
  };
  CHECK(accuracy(100) > 0.98);
  CHECK(accuracy(100) < 1.0);
  CHECK(accuracy(1000) >= 0.99);
  CHECK(accuracy(1000) <= 1.0);
  CHECK(accuracy(1000) > accuracy(100));
}

TEST_CASE("log_big") {
  CHECK(log_big(BigInt(1)) == doctest::Approx(0.0));
  CHECK(log_big(BigInt(123456789)) == doctest::Approx(std::log(123456789.0)));
  BigInt big = 1;
  for (int i = 0; i < 200; ++i) big *= 10;
  CHECK(log_big(big) == doctest::Approx(200.0 * std::log(10.0)).epsilon(1e-12));
  CHECK_THROWS_AS(log_big(BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(log_big(BigInt(-3)), std::domain_error);
}

TEST_CASE("rational construction reduces") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(1, 2));
  CHECK(Rational(7).str() == "7/1");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/10") == Rational(3, 10));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("90/132") == Rational(15, 22));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("rational round-trips through strings up to 500 digits") {
  RandomSource rng(20240817);
  for (int rep = 0; rep < 50; ++rep) {
    auto digits = [&](int count) {
      std::string s = std::to_string(1 + rng.next_below(9));
      for (int i = 1; i < count; ++i) s += static_cast<char>('0' + rng.next_below(10));
      return s;
    };
    const int len = 1 + static_cast<int>(rng.next_below(500));
    Rational r(BigInt(digits(len)), BigInt(digits(1 + static_cast<int>(rng.next_below(500)))));
    if (rng.next_below(2) == 0) r = -r;
    CAPTURE(rep);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("rational arithmetic examples") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 5) * Rational(5, 2) == Rational(1));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK((-Rational(1, 2)).str() == "-1/2");
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic properties on random values") {
  RandomSource rng(7);
  auto random_rational = [&] {
    const long long num = static_cast<long long>(rng.next_below(2001)) - 1000;
    const long long den = 1 + static_cast<long long>(rng.next_below(1000));
    return Rational(num, den);
  };
  for (int rep = 0; rep < 300; ++rep) {
    const Rational a = random_rational();
    const Rational b = random_rational();
    const Rational c = random_rational();
    CAPTURE(rep);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    const BigInt g = boost::multiprecision::gcd(
        boost::multiprecision::abs((a * b + c).numerator()), (a * b + c).denominator());
    CHECK(g == 1);
  }
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(3, 10) >= Rational(3, 10));
  CHECK(abs(Rational(-2, 7)) == Rational(2, 7));
  RandomSource rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const long long a = static_cast<long long>(rng.next_below(400)) - 200;
    const long long b = 1 + static_cast<long long>(rng.next_below(60));
    const long long c = static_cast<long long>(rng.next_below(400)) - 200;
    const long long d = 1 + static_cast<long long>(rng.next_below(60));
    CAPTURE(rep);
    CHECK((Rational(a, b) < Rational(c, d)) == (a * d < c * b));
  }
}

TEST_CASE("rational to_double") {
  CHECK(Rational(3, 10).to_double() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(Rational(1, 7).to_double() == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
  CHECK(Rational(-3, 2).to_double() == doctest::Approx(-1.5));
  CHECK(Rational(0).to_double() == 0.0);
  // Far beyond double range on both sides of the fraction bar.
  const Rational huge_ratio(catalan(999), catalan(1000));
  CHECK(huge_ratio.to_double() ==
        doctest::Approx(catalan_ratio(1000).to_double()).epsilon(1e-12));
  CHECK(Rational(1001, 2 * (2 * 1000 - 1)).to_double() ==
        doctest::Approx(1001.0 / 3998.0).epsilon(1e-14));
}
