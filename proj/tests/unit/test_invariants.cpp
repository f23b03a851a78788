#include <doctest.h>

#include "g2cert/error.hpp"
#include "g2cert/g2/invariants.hpp"

using namespace g2cert;

TEST_CASE("Cartan invariants of degrees 2 and 6") {
  const WeylGroup w = synthesize_weyl_group();
  const CartanInvariants inv = weyl_invariants_on_cartan(w);
  CHECK(inv.certificate.ok);
  CHECK(inv.f2.total_degree() == 2);
  CHECK(inv.f6.total_degree() == 6);
  // The short roots are a, b, a - b up to sign, so f2 is proportional to
  // a^2 + b^2 + (a - b)^2.
  const MultiPoly expected = inv.ring.parse("a^2 - a*b + b^2");
  CHECK(inv.f2 == expected * inv.ring.constant(inv.f2.leading_coefficient()));
  // No invariant of degree 4 is independent of f2: R(a^4) is a multiple of f2^2.
  const MultiPoly r4 = [&] {
    MultiPoly s = inv.ring.zero();
    for (const auto& e : w.elements()) s = s + act_on_cartan(e, inv.ring.parse("a^4"));
    return s;
  }();
  const MultiPoly sq = inv.f2 * inv.f2;
  CHECK(r4 * inv.ring.constant(sq.leading_coefficient()) == sq * inv.ring.constant(r4.leading_coefficient()));
}

TEST_CASE("Reynolds averaging is refused in positive characteristic") {
  const WeylGroup w = synthesize_weyl_group();
  CHECK_THROWS_AS(weyl_invariants_on_cartan(w, Field::prime(7)), UnsupportedError);
}

TEST_CASE("generic freeness from the Smith form") {
  const Certificate c = generic_freeness_certificate();
  CHECK(c.ok);
  CHECK(std::find(c.witnesses.begin(), c.witnesses.end(), "elementary divisors (1,1)") != c.witnesses.end());

  IntMatrix doubled = build_weight_table().chart_matrix();
  for (std::size_t i = 0; i < doubled.rows(); ++i)
    for (std::size_t j = 0; j < doubled.cols(); ++j) doubled(i, j) *= 2;
  const Certificate d = generic_freeness_certificate(doubled);
  CHECK_FALSE(d.ok);
  CHECK(std::find(d.witnesses.begin(), d.witnesses.end(), "elementary divisors (2,2)") != d.witnesses.end());
}
