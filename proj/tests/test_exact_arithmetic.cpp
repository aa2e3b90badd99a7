#include <doctest.h>

#include <random>

#include "mlq/bigint.hpp"
#include "mlq/combinatorics.hpp"
#include "mlq/rational.hpp"

using mlq::BigInt;
using mlq::Rational;

TEST_CASE("BigInt basics") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_string() == "-1");
  CHECK(BigInt(1000000000LL).to_string() == "1000000000");
  CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
        "-123456789012345678901234567890");
  CHECK(BigInt(123).fits_int64());
  CHECK(BigInt(123).to_int64() == 123);
  CHECK(BigInt(std::numeric_limits<long long>::min()).to_int64() ==
        std::numeric_limits<long long>::min());
  CHECK_FALSE(BigInt::from_string("9223372036854775808").fits_int64());
}

TEST_CASE("BigInt arithmetic against 64-bit reference") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    long long a = static_cast<long long>(rng() % 2000001) - 1000000;
    long long b = static_cast<long long>(rng() % 2000001) - 1000000;
    BigInt A(a), B(b);
    CHECK((A + B).to_int64() == a + b);
    CHECK((A - B).to_int64() == a - b);
    CHECK((A * B).to_int64() == a * b);
    if (b != 0) {
      CHECK((A / B).to_int64() == a / b);
      CHECK((A % B).to_int64() == a % b);
    }
    CHECK((A < B) == (a < b));
  }
}

TEST_CASE("BigInt divmod reconstruction on large operands") {
  std::mt19937_64 rng(11);
  auto random_big = [&rng](int limbs) {
    BigInt v(0);
    for (int i = 0; i < limbs; ++i)
      v = v * BigInt(1000000000LL) + BigInt(static_cast<long long>(rng() % 1000000000ULL));
    return v;
  };
  for (int i = 0; i < 300; ++i) {
    BigInt a = random_big(1 + static_cast<int>(rng() % 6));
    BigInt b = random_big(1 + static_cast<int>(rng() % 3));
    if (b.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r >= BigInt(0));
    CHECK(r < b);
  }
}

TEST_CASE("BigInt gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
  BigInt big = mlq::factorial(30);
  CHECK(BigInt::gcd(big, big) == big);
}

TEST_CASE("Rational normalization and arithmetic") {
  Rational half(BigInt(2), BigInt(4));
  CHECK(half.to_string() == "1/2");
  Rational minus_half(BigInt(1), BigInt(-2));
  CHECK(minus_half.to_string() == "-1/2");
  CHECK((half + minus_half).is_zero());
  CHECK((half * Rational(BigInt(4))).to_string() == "2");
  CHECK(Rational::from_string("4/6") == Rational(BigInt(2), BigInt(3)));
  CHECK(Rational::from_string("-7").to_string() == "-7");
  CHECK(Rational(BigInt(1), BigInt(3)) + Rational(BigInt(1), BigInt(6)) ==
        Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(3), BigInt(6)).is_integer() == false);
  CHECK(Rational(BigInt(4), BigInt(2)).to_integer() == BigInt(2));
}

TEST_CASE("binomial conventions") {
  CHECK(mlq::binomial(4, 2) == BigInt(6));
  CHECK(mlq::binomial(5, -1) == BigInt(0));
  CHECK(mlq::binomial(5, 6) == BigInt(0));
  CHECK(mlq::binomial(-2, 0) == BigInt(0));
  // Pascal-triangle oracle for a larger value
  long long pascal[21][21] = {};
  for (int n = 0; n <= 20; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k)
      pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
  }
  CHECK(mlq::binomial(20, 7) == BigInt(pascal[20][7]));
  CHECK(BigInt(pascal[20][7]) == BigInt(77520));
}

TEST_CASE("multinomial") {
  CHECK(mlq::multinomial(6, {1, 2, 3}) == BigInt(60));
  CHECK(mlq::multinomial(5, {2, 4}) == BigInt(0));
  CHECK(mlq::multinomial(0, {0, 0}) == BigInt(1));
  CHECK(mlq::multinomial(4, {-1, 5}) == BigInt(0));
  // product-of-binomials oracle: C(13,2) C(11,3) C(8,5) C(3,3)
  BigInt oracle = mlq::binomial(13, 2) * mlq::binomial(11, 3) *
                  mlq::binomial(8, 5) * mlq::binomial(3, 3);
  CHECK(mlq::multinomial(13, {2, 3, 5, 3}) == oracle);
  CHECK(oracle == BigInt(720720));
}
