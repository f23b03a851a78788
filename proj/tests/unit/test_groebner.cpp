#include <doctest.h>

#include <random>

#include "g2cert/error.hpp"
#include "g2cert/mpoly/ideal.hpp"
#include "support/random.hpp"

using namespace g2cert;

TEST_CASE("small Groebner bases") {
  const PolyRing r(Field::rationals(), {"X1", "X2"});
  const auto g1 = buchberger({r.parse("X1")});
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == r.parse("X1"));

  const auto unit = buchberger({r.parse("X1"), r.parse("X1 + 1")});
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].is_one());

  const PolyRing ab(Field::rationals(), {"x", "y"});
  const IdealBasis i(ab, {ab.parse("x^2 - y"), ab.parse("x*y - 1")});
  CHECK(is_groebner(i.groebner()));
  CHECK(i.contains(ab.parse("x^3 - 1")));
  CHECK(i.contains(ab.parse("y^3 - 1")));
  CHECK_FALSE(i.contains(ab.parse("x - 1")));
}

TEST_CASE("the affine model ideal is already Groebner") {
  const PolyRing r(Field::rationals(), {"y1", "y2", "y3", "z1", "z2"});
  const IdealBasis i(r, {r.parse("y1 + y2 + y3 + 1"), r.parse("y1*y2*y3 - z1*z2")});
  const auto& g = i.groebner();
  CHECK(g.size() == 2);
  CHECK(is_groebner(g));
  CHECK_FALSE(i.is_unit());
}

TEST_CASE("normal form examples") {
  const PolyRing x(Field::rationals(), {"x1", "x2", "x3", "x5", "x6", "x7"});
  const IdealBasis chart(x, {x.parse("x1*x7 + x2*x6 + x3*x5 + 1")});
  CHECK(normal_form(x.parse("x1*x7 + x2*x6 + x3*x5 + 1"), chart).is_zero());

  // y1 + y2 + y3 + 1 with y1 = x1 x7, y2 = x2 x6, y3 = x3 x5.
  const PolyRing y(Field::rationals(), {"y1", "y2", "y3", "z1", "z2"});
  const MultiPoly rel = y.parse("y1 + y2 + y3 + 1").substitute(
      {x.parse("x1*x7"), x.parse("x2*x6"), x.parse("x3*x5"), x.parse("x1*x5*x6"), x.parse("x2*x3*x7")});
  CHECK(normal_form(rel, chart).is_zero());

  const PolyRing p(Field::rationals(), {"Y1", "Y2", "Y3", "Z1", "Z2"});
  const IdealBasis l4(p, {p.parse("Z1*Z2 + Y2*Y3 + Y1*Y3 + Y1*Y2")});
  CHECK(normal_form(p.one(), l4) == p.one());
}

TEST_CASE("reduction is well defined modulo the ideal") {
  std::mt19937_64 rng(4242);
  for (const Field& k : {Field::rationals(), Field::prime(3)}) {
    const PolyRing r(k, {"a", "b", "c"});
    const IdealBasis i(r, {r.parse("a^2 + b*c - 1"), r.parse("a*b - c^2")});
    CHECK(is_groebner(i.groebner()));
    for (int trial = 0; trial < 25; ++trial) {
      const MultiPoly f = testing::random_poly(rng, r), g = testing::random_poly(rng, r),
                      h = testing::random_poly(rng, r);
      CHECK(i.normal_form(f * g + h) == i.normal_form(i.normal_form(f * g) + h));
      // Multiples of generators reduce to zero.
      CHECK(i.normal_form(f * i.generators()[0] + g * i.generators()[1]).is_zero());
    }
  }
}

TEST_CASE("resource caps are enforced") {
  const PolyRing r(Field::rationals(), {"a", "b"});
  std::vector<MultiPoly> many(7, r.parse("a"));
  CHECK_THROWS_AS(buchberger(many), ResourceError);
  const PolyRing wide(Field::rationals(), {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"});
  CHECK_THROWS_AS(buchberger({wide.parse("v1")}), ResourceError);
  GroebnerLimits tight;
  tight.max_pairs = 0;
  CHECK_THROWS_AS(buchberger({r.parse("a^2 - b"), r.parse("a*b - 1")}, tight), ResourceError);
}

TEST_CASE("Groebner cache is shared by copies") {
  const PolyRing r(Field::rationals(), {"a", "b"});
  const IdealBasis i(r, {r.parse("a^2 - b"), r.parse("a*b - 1")});
  const IdealBasis j = i;
  CHECK(&i.groebner() == &j.groebner());
}
