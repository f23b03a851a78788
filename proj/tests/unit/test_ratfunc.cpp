#include <doctest.h>

#include <random>

#include "g2cert/error.hpp"
#include "g2cert/mpoly/ratfunc.hpp"
#include "support/random.hpp"

using namespace g2cert;

TEST_CASE("lazy reduction") {
  const PolyRing r(Field::rationals(), {"a", "b"});
  const RationalFunction f(r.parse("a^2*b"), r.parse("2*a*b^2"));
  CHECK(f.num() == r.parse("1/2*a"));
  CHECK(f.den() == r.parse("b"));
  CHECK(f.to_string() == "1/2*a/b");

  const RationalFunction g(r.parse("a^2 - 1"), r.parse("a - 1"));
  CHECK(g.is_polynomial());
  CHECK(g.as_polynomial() == r.parse("a + 1"));

  const RationalFunction h(r.parse("a + 1"), r.parse("a^2 - 1"));
  CHECK(h.num().is_one());
  CHECK(h.den() == r.parse("a - 1"));

  CHECK_THROWS_AS(RationalFunction(r.one(), r.zero()), ArithmeticError);
  CHECK_THROWS_AS(RationalFunction(r.zero()).inv(), ArithmeticError);
}

TEST_CASE("equality by cross-multiplication") {
  const PolyRing r(Field::rationals(), {"a", "b"});
  const RationalFunction f(r.parse("a + b"), r.parse("a*b + a + b + 1"));
  const RationalFunction g(r.parse("a^2 + 2*a*b + b^2"), r.parse("(a + b)*(a*b + a + b + 1)"));
  CHECK(f == g);
  CHECK_FALSE(f == RationalFunction(r.one()));
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937_64 rng(55);
  for (const Field& k : {Field::rationals(), Field::prime(5)}) {
    const PolyRing r(k, {"a", "b"});
    auto nonzero = [&] {
      MultiPoly p = r.zero();
      while (p.is_zero()) p = testing::random_poly(rng, r, 3, 2);
      return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
      const RationalFunction x(nonzero(), nonzero()), y(nonzero(), nonzero()), z(nonzero(), nonzero());
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * x.inv() == RationalFunction(r.one()));
      CHECK((x - x).is_zero());
      CHECK((x / y) * y == x);
    }
  }
}

TEST_CASE("substitution examples") {
  const PolyRing r(Field::rationals(), {"X1", "X2", "X3", "X4", "X5", "X6", "X7", "t1", "t2"});
  const MultiPoly n = r.parse("X1*X7 + X2*X6 + X3*X5 + X4^2");

  CHECK(mp_substitute(r.parse("X4"), identity_assignment(r)) == RationalFunction(r.parse("X4")));

  auto v = [&](const char* s) { return RationalFunction(r.parse(s)); };
  const RationalFunction t1 = v("t1"), t2 = v("t2");
  std::vector<RationalFunction> torus = identity_assignment(r);
  torus[0] = t1 * v("X1");
  torus[1] = t2 * v("X2");
  torus[2] = t1 / t2 * v("X3");
  torus[4] = t2 / t1 * v("X5");
  torus[5] = v("X6") / t2;
  torus[6] = v("X7") / t1;
  const RationalFunction image = mp_substitute(n, torus);
  CHECK(image == RationalFunction(n));
  CHECK(image.is_polynomial());
  CHECK(image.as_polynomial() == n);

  CHECK_THROWS_AS(mp_substitute(n, {v("X1")}), UsageError);
}

TEST_CASE("Cremona substitution on the cubic relation") {
  const PolyRing r(Field::rationals(), {"Y1", "Y2", "Y3", "Z1", "Z2"});
  const MultiPoly lambda3 = r.parse("Y1*Y2*Y3 + (Y1 + Y2 + Y3)*Z1*Z2");
  const MultiPoly lambda4 = r.parse("Z1*Z2 + Y2*Y3 + Y1*Y3 + Y1*Y2");
  std::vector<RationalFunction> inv;
  for (const auto& x : r.vars()) inv.push_back(RationalFunction(x).inv());
  const RationalFunction image = mp_substitute(lambda3, inv);
  const MultiPoly d = r.parse("Y1*Y2*Y3*Z1*Z2");
  CHECK(image == RationalFunction(lambda4, d));
  // Clearing the degree-3 denominator D^3 leaves D^2 times the quadric.
  CHECK(image.num() * d.pow(3) == image.den() * d.pow(2) * lambda4);
}

TEST_CASE("substitution is a ring homomorphism on random pairs") {
  std::mt19937_64 rng(77);
  const PolyRing r(Field::rationals(), {"a", "b", "c"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RationalFunction> assignment;
    for (int i = 0; i < 3; ++i) {
      MultiPoly d = r.zero();
      while (d.is_zero()) d = testing::random_poly(rng, r, 2, 1);
      assignment.emplace_back(testing::random_poly(rng, r, 3, 2), d);
    }
    const MultiPoly f = testing::random_poly(rng, r, 3, 2), g = testing::random_poly(rng, r, 3, 2);
    CHECK(mp_substitute(f * g, assignment) == mp_substitute(f, assignment) * mp_substitute(g, assignment));
    CHECK(mp_substitute(f + g, assignment) == mp_substitute(f, assignment) + mp_substitute(g, assignment));
  }
}
