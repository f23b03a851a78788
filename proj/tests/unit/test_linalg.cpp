#include <doctest.h>

#include <random>

#include "g2cert/arith/matrix.hpp"
#include "support/random.hpp"

using namespace g2cert;

TEST_CASE("rank and kernel of trivial matrices") {
  const Field q = Field::rationals();
  const auto zero = rank_and_kernel(scalar_matrix(q, 3, 3));
  CHECK(zero.rank == 0);
  CHECK(zero.kernel.size() == 3);
  const auto id = rank_and_kernel(ScalarMatrix::identity(5, q.zero()));
  CHECK(id.rank == 5);
  CHECK(id.kernel.empty());
}

TEST_CASE("rank-nullity and kernel correctness on random matrices") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dim(1, 7);
  for (const Field& k : {Field::rationals(), Field::prime(2), Field::prime(5), Field::prime(13)}) {
    CAPTURE(k.name());
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
      ScalarMatrix m = scalar_matrix(k, r, c);
      // Low-rank structure half of the time.
      const bool low = trial % 2 == 0;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          m(i, j) = (low && i > 0) ? m(0, j) * k.from_int(static_cast<long>(i)) : testing::random_scalar(rng, k);
      const auto rk = rank_and_kernel(m);
      CHECK(rk.rank + rk.kernel.size() == c);
      for (const auto& v : rk.kernel)
        for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("determinant, inverse and solve") {
  const Field q = Field::rationals();
  auto m = ScalarMatrix::from_rows({{q.from_int(2), q.from_int(1)}, {q.from_int(1), q.from_int(3)}}, q.zero());
  CHECK(determinant(m) == q.from_int(5));
  CHECK(m * inverse(m) == ScalarMatrix::identity(2, q.zero()));
  const auto x = solve(m, {q.from_int(3), q.from_int(4)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == q.one());
  CHECK((*x)[1] == q.one());
  auto singular = ScalarMatrix::from_rows({{q.one(), q.one()}, {q.one(), q.one()}}, q.zero());
  CHECK_FALSE(solve(singular, {q.one(), q.zero()}).has_value());
  CHECK_THROWS_AS(inverse(singular), ArithmeticError);
}

TEST_CASE("characteristic polynomial of a companion matrix") {
  const Field q = Field::rationals();
  // Companion of x^3 - 2.
  auto m = ScalarMatrix::from_rows({{q.zero(), q.zero(), q.from_int(2)},
                                    {q.one(), q.zero(), q.zero()},
                                    {q.zero(), q.one(), q.zero()}},
                                   q.zero());
  const auto c = characteristic_polynomial(m);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == q.from_int(-2));
  CHECK(c[1].is_zero());
  CHECK(c[2].is_zero());
  CHECK(c[3].is_one());
}
