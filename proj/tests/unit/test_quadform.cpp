#include <doctest.h>

#include <random>

#include "g2cert/error.hpp"
#include "g2cert/quadform/quadform.hpp"
#include "support/random.hpp"

using namespace g2cert;
using namespace g2cert::testing;

namespace {

const Field kQ = Field::rationals();

UniPoly poly(std::vector<long> c) { return UniPoly::from_ints(kQ, c); }

// Direct evaluation from the integer coefficient table, independent of
// QuadraticForm::eval.
long eval_int(const std::vector<std::vector<long>>& a, const std::vector<long>& x) {
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i; j < x.size(); ++j) s += a[i][j] * x[i] * x[j];
  return s;
}

// All nonzero integer vectors with entries in [-h, h] on which q vanishes.
std::vector<std::vector<long>> isotropic_vectors(const std::vector<std::vector<long>>& a, long h) {
  const std::size_t n = a.size();
  std::vector<std::vector<long>> found;
  std::vector<long> x(n, -h);
  while (true) {
    bool nonzero = false;
    for (long v : x) nonzero = nonzero || v != 0;
    if (nonzero && eval_int(a, x) == 0) found.push_back(x);
    std::size_t k = 0;
    while (k < n && x[k] == h) x[k++] = -h;
    if (k == n) break;
    ++x[k];
  }
  return found;
}

QuadraticForm from_table(const std::vector<std::vector<long>>& a) {
  QuadraticForm q(kQ, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) q.set(i, j, kQ.from_int(a[i][j]));
  return q;
}

std::vector<long> as_longs(const QuadricPoint& p) {
  std::vector<long> v;
  for (const auto& s : p.coordinates) v.push_back(s.to_rational().num().get_si());
  return v;
}

}  // namespace

TEST_CASE("bilinearization") {
  QuadraticForm sq(kQ, 1);
  sq.set(0, 0, kQ.one());
  CHECK(bilinearize(sq)(0, 0) == kQ.from_int(2));

  const ScalarMatrix b = bilinearize(lambda4_form());
  CHECK(determinant(b) == kQ.from_int(-2));
  CHECK(b(0, 0).is_zero());
  CHECK(b(0, 1) == kQ.one());
  CHECK(b(3, 4) == kQ.one());

  const auto radical = rank_and_kernel(bilinearize(lambda4_form(Field::prime(2)))).kernel;
  REQUIRE(radical.size() == 1);
  const Field f2 = Field::prime(2);
  CHECK(radical[0] == std::vector<Scalar>{f2.one(), f2.one(), f2.one(), f2.zero(), f2.zero()});
}

TEST_CASE("polarization identity in several characteristics") {
  std::mt19937_64 rng(11);
  for (const Field& k : {kQ, Field::prime(2), Field::prime(3), Field::prime(7)}) {
    for (int trial = 0; trial < 10; ++trial) {
      QuadraticForm q(k, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) q.set(i, j, random_scalar(rng, k));
      std::vector<Scalar> x, y, xy;
      for (int i = 0; i < 4; ++i) {
        x.push_back(random_scalar(rng, k));
        y.push_back(random_scalar(rng, k));
        xy.push_back(x.back() + y.back());
      }
      const ScalarMatrix b = bilinearize(q);
      Scalar bxy = k.zero();
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) bxy += x[i] * b(i, j) * y[j];
      CHECK(q.eval(xy) - q.eval(x) - q.eval(y) == bxy);
    }
  }
}

TEST_CASE("smoothness") {
  CHECK(is_smooth_quadric(lambda4_form()).ok);
  for (std::uint64_t p : {2, 3, 5, 7}) CHECK(is_smooth_quadric(lambda4_form(Field::prime(p))).ok);
  const Certificate c2 = is_smooth_quadric(lambda4_form(Field::prime(2)));
  CHECK(std::find(c2.witnesses.begin(), c2.witnesses.end(), "ok: radical line (1, 1, 1, 0, 0) has q = 1 != 0") !=
        c2.witnesses.end());

  const Field f2 = Field::prime(2);
  const PolyRing r(f2, {"X1", "X2", "X3"});
  const Certificate bad = is_smooth_quadric(QuadraticForm::from_polynomial(r.parse("X1*X2")));
  CHECK_FALSE(bad.ok);
  CHECK(bad.message.find("(0, 0, 1)") != std::string::npos);
  CHECK(is_smooth_quadric(QuadraticForm::from_polynomial(r.parse("X1*X2 + X3^2"))).ok);

  // Radical of dimension 2 over F_2 always meets the quadric.
  const PolyRing r4(f2, {"X1", "X2", "X3", "X4"});
  CHECK_FALSE(is_smooth_quadric(QuadraticForm::from_polynomial(r4.parse("X1*X2 + X3^2 + X4^2"))).ok);
  const PolyRing rq(kQ, {"X", "Y", "Z"});
  CHECK_FALSE(is_smooth_quadric(QuadraticForm::from_polynomial(rq.parse("X^2 - Y^2"))).ok);
}

TEST_CASE("twisted forms") {
  CHECK(twist_form(TwistData::split()) == lambda4_form());
  const TwistData z = TwistData::from_polynomials(poly({-2, 0, 0, 1}), poly({-5, 0, 1}));
  const PolyRing r(kQ, {"a", "b", "c", "u", "v"});
  CHECK(twist_form(z).polynomial(r) == r.parse("3*a^2 - 6*b*c + u^2 - 5*v^2"));
  CHECK(twist_congruence_certificate(z).ok);
  const TwistData w = TwistData::from_polynomials(poly({-1, -1, 0, 1}), poly({1, 0, 1}));
  CHECK(twist_congruence_certificate(w).ok);
  CHECK_THROWS_AS(TwistData::from_polynomials(poly({-2, 0, 1}), poly({-5, 0, 1})), PreconditionError);
}

TEST_CASE("degree-3 point and descent for the default torsor") {
  const TwistData z = TwistData::from_polynomials(poly({-2, 0, 0, 1}), poly({-5, 0, 1}));
  const Degree3Point d = degree3_point(z);
  CHECK(d.certificate.ok);
  const Field& k = d.point.field;
  REQUIRE(k.degree() == 3);
  const Scalar t = k.generator();
  CHECK(d.point.coordinates == std::vector<Scalar>{k.from_int(2), t * t, t, k.zero(), k.zero()});

  const DescentResult r = springer_descend(twist_form(z), d.point);
  CHECK(r.certificate.ok);
  CHECK(r.branch == "top-degree");
  CHECK(as_longs(r.point) == std::vector<long>{0, 1, 0, 0, 0});

  const Degree3Point s = degree3_point(TwistData::split());
  CHECK(as_longs(s.point) == std::vector<long>{1, 0, 0, 0, 0});
  const DescentResult rs = springer_descend(lambda4_form(), s.point);
  CHECK(rs.branch == "rational");
  CHECK(as_longs(rs.point) == std::vector<long>{1, 0, 0, 0, 0});
}

TEST_CASE("descent through the cofactor root, checked by exhaustive search") {
  // Planted: q(P(x)) = 4x (x^3 - 2) for P = (2x^2, x - 2, 0, x + 2, 0).
  const std::vector<std::vector<long>> table = {
      {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, 5}};
  const QuadraticForm q = from_table(table);
  const Field k = Field::number_field({-2, 0, 0, 1}, "theta");
  const Scalar t = k.generator();
  const QuadricPoint p{k, {k.from_int(2) * t * t, t - k.from_int(2), k.zero(), t + k.from_int(2), k.zero()}};
  const DescentResult r = springer_descend(q, p);
  CHECK(r.certificate.ok);
  CHECK(r.branch == "cofactor-root");
  const auto iso = isotropic_vectors(table, 2);
  CHECK(std::find(iso.begin(), iso.end(), as_longs(r.point)) != iso.end());

  // A twisted form whose idempotent point needs the cofactor root.
  const TwistData z = TwistData::from_polynomials(poly({-1, -1, 0, 1}), poly({-5, 0, 1}));
  const DescentResult rz = springer_descend(twist_form(z), degree3_point(z).point);
  CHECK(rz.branch == "cofactor-root");
  std::vector<std::vector<long>> tz(5, std::vector<long>(5, 0));
  const QuadraticForm fz = twist_form(z);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) tz[i][j] = fz.coeff(i, j).to_rational().num().get_si();
  const auto isoz = isotropic_vectors(tz, 3);
  CHECK(std::find(isoz.begin(), isoz.end(), as_longs(rz.point)) != isoz.end());
}

TEST_CASE("descent preconditions") {
  const Field k = Field::number_field({-2, 0, 0, 1}, "theta");
  const QuadricPoint off{k, {k.one(), k.one(), k.zero(), k.zero(), k.zero()}};
  CHECK_THROWS_AS(springer_descend(lambda4_form(), off), PreconditionError);
  const Field k2 = Field::number_field({-5, 0, 1}, "s");
  const QuadricPoint even{k2, {k2.zero(), k2.one(), k2.zero(), k2.zero(), k2.zero()}};
  CHECK_THROWS_AS(springer_descend(lambda4_form(), even), UnsupportedError);
}

TEST_CASE("stereographic parametrizations") {
  const PolyRing r(kQ, {"X", "Y", "Z"});
  const QuadraticForm circle = QuadraticForm::from_polynomial(r.parse("X^2 + Y^2 - Z^2"));
  const Parametrization c = stereographic_param(circle, {kQ.one(), kQ.zero(), kQ.one()}, {"X", "Y", "Z"});
  CHECK(c.certificate.ok);
  const PolyRing& u = c.forward.source().ring();
  const auto& fw = c.forward.coordinates();
  // Proportional to (s^2 - t^2, 2st, s^2 + t^2) with (s, t) = (u1, u2).
  const MultiPoly x = fw[0].num(), y = fw[1].num(), z = fw[2].num();
  CHECK(x * u.parse("2*u1*u2") == y * u.parse("u1^2 - u2^2"));
  CHECK(z * u.parse("2*u1*u2") == y * u.parse("u1^2 + u2^2"));

  CHECK(stereographic_param(lambda4_form(), {kQ.one(), kQ.zero(), kQ.zero(), kQ.zero(), kQ.zero()}).certificate.ok);
  const TwistData z5 = TwistData::from_polynomials(poly({-2, 0, 0, 1}), poly({-5, 0, 1}));
  CHECK(stereographic_param(twist_form(z5), {kQ.zero(), kQ.one(), kQ.zero(), kQ.zero(), kQ.zero()}).certificate.ok);

  CHECK_THROWS_AS(stereographic_param(circle, {kQ.one(), kQ.one(), kQ.one()}), PreconditionError);
  const QuadraticForm cone = QuadraticForm::from_polynomial(r.parse("X^2 - Y^2"));
  CHECK_THROWS_AS(stereographic_param(cone, {kQ.zero(), kQ.zero(), kQ.one()}), PreconditionError);
}
