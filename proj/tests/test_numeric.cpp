#include "padic/numeric.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace padic;

TEST_CASE("rational arithmetic stays exact and reduced") {
  const Rational x(6, 8);
  CHECK(numerator(x) == 3);
  CHECK(denominator(x) == 4);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(abs(Rational(-2, 3)) == Rational(2, 3));
  CHECK(sign(Rational(-1, 9)) == -1);
  CHECK(sign(Rational(0)) == 0);
}

TEST_CASE("integer powers") {
  CHECK(pow(Rational(1, 4), 3) == Rational(1, 64));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == 1);
  CHECK(ipow(Integer(3), 40) == Integer("12157665459056928801"));
  CHECK(pow_u64(2, 10) == 1024u);
  CHECK_THROWS_AS(pow_u64(2, 64), std::overflow_error);
}

TEST_CASE("decimal exponent is exact at powers of ten") {
  CHECK(decimal_exponent(Rational(1)) == 0);
  CHECK(decimal_exponent(Rational(999, 1000)) == -1);
  CHECK(decimal_exponent(Rational(1, 10)) == -1);
  CHECK(decimal_exponent(Rational(100)) == 2);
  CHECK(decimal_exponent(Rational(-12345, 10)) == 3);
}

TEST_CASE("directed decimal rounding") {
  const Rational third(1, 3);
  CHECK(to_decimal(third, 4, Rounding::Down) == "0.3333");
  CHECK(to_decimal(third, 4, Rounding::Up) == "0.3334");
  CHECK(to_decimal(Rational(2, 3), 3) == "0.667");
  CHECK(to_decimal(Rational(-2, 3), 3, Rounding::Down) == "-0.667");
  CHECK(to_decimal(Rational(-2, 3), 3, Rounding::Up) == "-0.666");
  CHECK(to_decimal(Rational(1234567), 3) == "1230000");
  CHECK(to_decimal(Rational(0), 5) == "0");
  CHECK(to_decimal(Rational(1, 800), 2) == "0.0013");
}

TEST_CASE("parsing decimal and fractional literals") {
  CHECK(parse_rational("3/7") == Rational(3, 7));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("1e-20") == ten_to_minus(20));
  CHECK(parse_rational("2.5E+3") == 2500);
  CHECK(parse_rational("+4") == 4);
  CHECK(parse_rational("0.69") == Rational(69, 100));
  CHECK(parse_rational("007/010") == Rational(7, 10));
  CHECK(parse_rational("-0") == 0);
  CHECK_THROWS_AS(parse_rational("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("decimal round trip") {
  const Rational x(22, 7);
  const Rational back = parse_rational(to_decimal(x, 30));
  CHECK(abs(back - x) < ten_to_minus(28));
}

TEST_CASE("conversion to MPFR reals") {
  const Real x = to_real<Real>(Rational(1, 3));
  CHECK(abs(x * 3 - 1) < Real("1e-60"));
}
