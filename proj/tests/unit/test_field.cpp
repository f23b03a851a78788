#include <doctest.h>

#include <random>

#include "g2cert/arith/field.hpp"
#include "g2cert/error.hpp"
#include "support/random.hpp"

using namespace g2cert;

TEST_CASE("prime field inverse") {
  const Field f7 = Field::prime(7);
  CHECK(f7.from_int(3).inv() == f7.from_int(5));
  CHECK(f7.from_int(-1).residue() == 6);
  CHECK(f7.from_rational(Rational(Integer(1), Integer(2))) == f7.from_int(4));
  CHECK_THROWS_AS(f7.from_rational(Rational(Integer(1), Integer(7))), ArithmeticError);
}

TEST_CASE("prime field construction is validated") {
  CHECK_THROWS_AS(Field::prime(9), UsageError);
  CHECK_THROWS_AS(Field::prime(101), UnsupportedError);
  CHECK(Field::prime(101, 200).characteristic() == 101);
}

TEST_CASE("number field reduction by the defining polynomial") {
  const Field k = Field::number_field({Rational(-2), Rational(0), Rational(0), Rational(1)});
  const Scalar t = k.generator();
  CHECK(t * (t * t) == k.from_int(2));
  CHECK((t * t).to_string() == "t^2");
  CHECK(t.inv() == (t * t) / k.from_int(2));
  CHECK(k.name() == "QQ[t]/(t^3 - 2)");
}

TEST_CASE("number field moduli are certified irreducible") {
  CHECK_THROWS_AS(Field::number_field({Rational(-1), Rational(0), Rational(1)}), PreconditionError);
  CHECK_THROWS_AS(Field::number_field({Rational(2), Rational(0), Rational(0), Rational(0), Rational(1)}),
                  UnsupportedError);
  CHECK_THROWS_AS(Field::number_field({Rational(1), Rational(2)}), PreconditionError);
}

TEST_CASE("mixed-field operands and division by zero are explicit errors") {
  const Field f5 = Field::prime(5), f7 = Field::prime(7);
  CHECK_THROWS_AS(f5.one() + f7.one(), DomainMismatchError);
  CHECK_THROWS_AS(Field::rationals().one() * f7.one(), DomainMismatchError);
  CHECK_THROWS_AS(f5.zero().inv(), ArithmeticError);
  CHECK_THROWS_AS(Field::rationals().zero().inv(), ArithmeticError);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240611);
  const std::vector<Field> fields = {Field::rationals(), Field::prime(2), Field::prime(7), Field::prime(97),
                                     Field::number_field({Rational(-2), Rational(0), Rational(0), Rational(1)})};
  for (const Field& k : fields) {
    CAPTURE(k.name());
    for (int trial = 0; trial < 60; ++trial) {
      const Scalar a = testing::random_scalar(rng, k);
      const Scalar b = testing::random_scalar(rng, k);
      const Scalar c = testing::random_scalar(rng, k);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == k.zero());
      if (!a.is_zero()) CHECK(a * a.inv() == k.one());
    }
  }
}
