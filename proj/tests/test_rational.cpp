#include "explore/errors.hpp"
#include "explore/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace explore;

TEST_CASE("parse_rational canonicalizes") {
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(to_exact_string(parse_rational("-7/21")) == "-1/3");
  CHECK(to_exact_string(parse_rational("4")) == "4/1");
  CHECK(to_exact_string(parse_rational("+6/4")) == "3/2");
  CHECK(to_compact_string(Rational(10, 5)) == "2");
  CHECK(to_compact_string(Rational(5, 10)) == "1/2");
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("ceil rounds toward positive infinity") {
  CHECK(ceil(Rational(1, 2)) == 1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(ceil(Rational(3)) == 3);
  CHECK(ceil(Rational(-7, 3)) == -2);
}

TEST_CASE("decimal rendering keeps six significant digits") {
  CHECK(to_decimal_string(Rational(1, 3)) == "0.333333");
  CHECK(to_decimal_string(Rational(222, 1)) == "222");
  CHECK(to_decimal_string(QuadraticNumber(Rational(5, 2)) + QuadraticNumber::sqrt(2)) == "3.91421");
}

TEST_CASE("quadratic numbers normalize perfect squares and square factors") {
  CHECK(QuadraticNumber::sqrt(4).is_rational());
  CHECK(QuadraticNumber::sqrt(4) == QuadraticNumber(2));
  const QuadraticNumber s8 = QuadraticNumber::sqrt(8);
  CHECK(s8.radicand() == 2);
  CHECK(s8.surd_coefficient() == 2);
  CHECK(QuadraticNumber::sqrt(2) * QuadraticNumber::sqrt(2) == QuadraticNumber(2));
}

TEST_CASE("quadratic sign agrees with the squared comparison") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int i = 0; i < 2000; ++i) {
    const Rational a(num(gen), den(gen)), b(num(gen), den(gen));
    const QuadraticNumber x(a, b, 2);
    // sign(a + b sqrt 2) from the signs of a, b and a^2 vs 2 b^2.
    int expected;
    if (a >= 0 && b >= 0) expected = (a == 0 && b == 0) ? 0 : 1;
    else if (a <= 0 && b <= 0) expected = -1;
    else if (a > 0) expected = a * a > 2 * b * b ? 1 : -1;
    else expected = 2 * b * b > a * a ? 1 : -1;
    CHECK(x.sign() == expected);
    CHECK(std::abs(x.to_double() - (a.convert_to<double>() + b.convert_to<double>() * std::sqrt(2.0))) < 1e-9);
  }
}

TEST_CASE("quadratic arithmetic round trips") {
  const QuadraticNumber delta = QuadraticNumber::parse("1/sqrt(2)-1");
  CHECK(delta == QuadraticNumber::sqrt(2) / QuadraticNumber(2) - QuadraticNumber(1));
  CHECK(delta.to_string() == "-1+1/2*sqrt(2)");
  CHECK(QuadraticNumber::parse(delta.to_string()) == delta);
  CHECK(delta * delta.inverse() == QuadraticNumber(1));
  CHECK(QuadraticNumber::parse("+sqrt(2)") == QuadraticNumber::sqrt(2));
  CHECK(QuadraticNumber::parse("3*sqrt(2)") == QuadraticNumber(0, 3, 2));
  CHECK(QuadraticNumber::parse("-1/2") == QuadraticNumber(Rational(-1, 2)));
  CHECK_THROWS(QuadraticNumber::parse("sqrt(-2)"));
  CHECK_THROWS(QuadraticNumber::parse("one"));
}

TEST_CASE("golden blocking parameter yields 5/2 + sqrt(2)") {
  const QuadraticNumber delta = QuadraticNumber::parse("1/sqrt(2)-1");
  const QuadraticNumber term = (delta * delta + delta / QuadraticNumber(2)) / (QuadraticNumber(1) + delta);
  CHECK(QuadraticNumber(4) + term == QuadraticNumber(Rational(5, 2)) + QuadraticNumber::sqrt(2));
}
