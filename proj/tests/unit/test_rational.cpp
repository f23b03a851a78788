#include <doctest.h>

#include "g2cert/arith/rational.hpp"
#include "g2cert/error.hpp"

using namespace g2cert;

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
  const Rational r(Integer(6), Integer(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(Integer(0), Integer(-7)).den() == 1);
  CHECK(Rational::parse("-10/4") == Rational(Integer(-5), Integer(2)));
}

TEST_CASE("exact rational sums") {
  CHECK(Rational(Integer(1), Integer(3)) + Rational(Integer(1), Integer(6)) == Rational(Integer(1), Integer(2)));
  CHECK((Rational(Integer(1), Integer(3)) + Rational(Integer(1), Integer(6))).to_string() == "1/2");
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
  CHECK_THROWS_AS(Rational(0).inv(), ArithmeticError);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), ArithmeticError);
  CHECK_THROWS_AS(Rational::parse("abc"), UsageError);
}

TEST_CASE("ordering") {
  CHECK(Rational(Integer(-1), Integer(2)) < Rational(0));
  CHECK(Rational(Integer(2), Integer(3)) > Rational(Integer(3), Integer(5)));
}
