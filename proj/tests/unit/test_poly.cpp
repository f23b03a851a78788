#include <doctest.h>

#include <random>

#include "g2cert/error.hpp"
#include "g2cert/mpoly/poly.hpp"
#include "support/random.hpp"

using namespace g2cert;

namespace {

PolyRing seven(const Field& k) { return PolyRing(k, {"X1", "X2", "X3", "X4", "X5", "X6", "X7"}); }

}  // namespace

TEST_CASE("grevlex and printing order") {
  CHECK(grevlex_greater({2, 0, 0}, {1, 1, 0}));
  CHECK(grevlex_greater({1, 1, 0}, {1, 0, 1}));
  CHECK(grevlex_greater({0, 2, 0}, {1, 0, 1}));
  CHECK(grevlex_greater({1, 0, 0}, {0, 1, 0}));
  CHECK_FALSE(grevlex_greater({1, 0, 1}, {1, 0, 1}));

  const PolyRing r = seven(Field::rationals());
  const MultiPoly n = r.parse("X4^2 + X3*X5 + X2*X6 + X1*X7");
  CHECK(n.to_string() == "X1*X7 + X2*X6 + X3*X5 + X4^2");
  CHECK(r.parse("-X1 + 3/2*X2 - 1").to_string() == "-X1 + 3/2*X2 - 1");
  CHECK(r.zero().to_string() == "0");
}

TEST_CASE("basic arithmetic") {
  const PolyRing r = seven(Field::rationals());
  const MultiPoly s = r.var("X1") + r.var("X2");
  CHECK(s.pow(2).to_string() == "X1^2 + 2*X1*X2 + X2^2");

  const PolyRing r2 = seven(Field::prime(2));
  const MultiPoly s2 = r2.var("X1") + r2.var("X2");
  CHECK(s2.pow(2).to_string() == "X1^2 + X2^2");

  CHECK_THROWS_AS(s + s2, DomainMismatchError);
  CHECK((s - s).is_zero());
  CHECK(s.is_homogeneous());
  CHECK_FALSE((s + r.one()).is_homogeneous());
  CHECK_THROWS_AS(r.zero().total_degree(), PreconditionError);
  CHECK_THROWS_AS(r.parse("X1 + Y"), UsageError);
}

TEST_CASE("invariant monomials satisfy the torus relation") {
  const PolyRing y(Field::rationals(), {"y1", "y2", "y3", "z1", "z2"});
  const PolyRing x(Field::rationals(), {"x1", "x2", "x3", "x5", "x6", "x7"});
  const MultiPoly rel = y.parse("y1*y2*y3 - z1*z2");
  const std::vector<MultiPoly> images = {x.parse("x1*x7"), x.parse("x2*x6"), x.parse("x3*x5"), x.parse("x1*x5*x6"),
                                         x.parse("x2*x3*x7")};
  CHECK(rel.substitute(images).is_zero());
}

TEST_CASE("number-field coefficients print with parentheses") {
  const Field k = Field::number_field({Rational(-2), Rational(0), Rational(0), Rational(1)});
  const PolyRing r(k, {"a", "b"});
  const MultiPoly p = r.parse("(1 + t)*a + t*b - 2");
  CHECK(p.to_string() == "(t + 1)*a + t*b - 2");
  CHECK(r.parse(p.to_string()) == p);
}

TEST_CASE("parser round trip on random polynomials") {
  std::mt19937_64 rng(2024);
  for (const Field& k : {Field::rationals(), Field::prime(7)}) {
    const PolyRing r = seven(k);
    for (int trial = 0; trial < 50; ++trial) {
      const MultiPoly p = testing::random_poly(rng, r, 6, 4);
      CHECK(r.parse(p.to_string()) == p);
    }
  }
}

TEST_CASE("jacobian") {
  const PolyRing q(Field::rationals(), {"X1"});
  CHECK(jacobian({q.parse("X1^2")}, {0})(0, 0) == q.parse("2*X1"));
  const PolyRing f2(Field::prime(2), {"X1"});
  CHECK(jacobian({f2.parse("X1^2")}, {0})(0, 0).is_zero());

  const PolyRing r(Field::rationals(), {"Y1", "Y2", "Y3", "Z1", "Z2"});
  const MultiPoly lambda4 = r.parse("Z1*Z2 + Y2*Y3 + Y1*Y3 + Y1*Y2");
  const auto j = jacobian({lambda4}, {0, 1, 2, 3, 4});
  CHECK(j(0, 0) == r.parse("Y2 + Y3"));
  CHECK(j(0, 1) == r.parse("Y1 + Y3"));
  CHECK(j(0, 2) == r.parse("Y1 + Y2"));
  CHECK(j(0, 3) == r.parse("Z2"));
  CHECK(j(0, 4) == r.parse("Z1"));
}

TEST_CASE("Leibniz rule and substitution homomorphism on random pairs") {
  std::mt19937_64 rng(7);
  const Field cubic = Field::number_field({Rational(-2), Rational(0), Rational(0), Rational(1)});
  for (const Field& k : {Field::rationals(), Field::prime(2), Field::prime(3), cubic}) {
    CAPTURE(k.name());
    const PolyRing r(k, {"a", "b", "c"});
    for (int trial = 0; trial < 25; ++trial) {
      const MultiPoly f = testing::random_poly(rng, r), g = testing::random_poly(rng, r);
      for (std::size_t v = 0; v < 3; ++v) CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
      const std::vector<MultiPoly> images = {testing::random_poly(rng, r, 3, 2), testing::random_poly(rng, r, 3, 2),
                                             testing::random_poly(rng, r, 3, 2)};
      CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
      CHECK((f + g).substitute(images) == f.substitute(images) + g.substitute(images));
    }
  }
}

TEST_CASE("exact division") {
  const PolyRing r(Field::rationals(), {"a", "b"});
  const MultiPoly f = r.parse("a^2 - b^2"), g = r.parse("a - b");
  const auto q = f.exact_divide(g);
  REQUIRE(q.has_value());
  CHECK(*q == r.parse("a + b"));
  CHECK_FALSE(r.parse("a^2 + b^2").exact_divide(g).has_value());
  CHECK_THROWS_AS((void)f.exact_divide(r.zero()), ArithmeticError);
}
