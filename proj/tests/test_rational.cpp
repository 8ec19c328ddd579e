#include "doctest.h"
#include "dst/errors.hpp"
#include "dst/rational.hpp"

using dst::BigInt;
using dst::Rational;

TEST_CASE("construction keeps lowest terms and a positive denominator") {
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(-4, 8) == Rational(-1, 2));
  CHECK(Rational(4, -8) == Rational(-1, 2));
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 2).denominator() == 2);
  CHECK(Rational(2, -4).denominator() == 2);
  CHECK_THROWS_AS(Rational(1, 0), dst::ParseError);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), dst::Error);

  // denominators grow without rounding
  Rational x(1, 3);
  for (int i = 0; i < 40; ++i) x *= Rational(1, 3);
  CHECK(x.denominator() == boost::multiprecision::pow(BigInt(3), 41));
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 2) <= Rational(1, 2));
  CHECK(Rational(3, 4) > Rational(2, 3));
  CHECK(Rational(0).in_unit_interval());
  CHECK(Rational(1).in_unit_interval());
  CHECK(Rational(1, 7).in_unit_interval());
  CHECK_FALSE(Rational(-1, 7).in_unit_interval());
  CHECK_FALSE(Rational(8, 7).in_unit_interval());
  CHECK(dst::min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
  CHECK(dst::max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("parsing accepts fractions, integers and short decimals") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("1") == Rational(1));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK(Rational::parse("1.5") == Rational(3, 2));
  CHECK(Rational::parse("0.333333333") == Rational(333333333, 1000000000));
  CHECK(Rational::parse("-2/5") == Rational(-2, 5));
  CHECK(Rational::parse(" 1/2 ") == Rational(1, 2));
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(Rational::parse(""), dst::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), dst::ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), dst::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), dst::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), dst::ParseError);
  CHECK_THROWS_AS(Rational::parse("0.1234567890"), dst::ParseError);  // ten digits
  CHECK_THROWS_AS(Rational::parse("1e3"), dst::ParseError);
  CHECK_THROWS_AS(Rational::parse("1 / 2"), dst::ParseError);
}

TEST_CASE("printing is canonical") {
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(5, 1).str() == "5");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(-3, 4).str() == "-3/4");
}

TEST_CASE("integer powers, including negative exponents") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(0).pow(2) == Rational(0));
  CHECK_THROWS_AS(Rational(0).pow(-1), dst::Error);
}
