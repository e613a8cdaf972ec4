#include <doctest.h>

#include "fernlab/errors.hpp"
#include "fernlab/rational.hpp"

using fernlab::Error;
using fernlab::ErrorKind;
using fernlab::Rational;

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(5, 1).str() == "5");
  CHECK(Rational(6, 4) == Rational(3, 2));
}

TEST_CASE("rational parse round trip") {
  CHECK(Rational::parse("22/7").str() == "22/7");
  CHECK(Rational::parse("-9").str() == "-9");
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 18));
  CHECK((a / b) == Rational(2));
  CHECK((-a) == Rational(-1, 3));
  CHECK(a.inverse() == Rational(3));
  CHECK_THROWS_AS(a / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);

  // repeated operations stay canonical
  Rational acc(0);
  for (int i = 1; i <= 50; ++i) acc += Rational(1, i);
  Rational back = acc;
  for (int i = 1; i <= 50; ++i) back -= Rational(1, i);
  CHECK(back == Rational(0));
  CHECK(back.str() == "0");
}
