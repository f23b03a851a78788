#include <doctest.h>

#include <random>

#include "g2cert/arith/smith.hpp"

using namespace g2cert;

namespace {

void check_smith(const IntMatrix& m, const SmithForm& s) {
  CHECK(s.U * m * s.V == s.D);
  CHECK(abs(integer_determinant(s.U)) == 1);
  CHECK(abs(integer_determinant(s.V)) == 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (std::size_t k = 0; k + 1 < s.divisors.size(); ++k) CHECK(s.divisors[k + 1] % s.divisors[k] == 0);
  for (const auto& d : s.divisors) CHECK(d > 0);
}

}  // namespace

TEST_CASE("Smith form examples") {
  const auto id = smith_normal_form(int_matrix({{1, 0}, {0, 1}}));
  CHECK(id.divisors == std::vector<Integer>{1, 1});

  const IntMatrix m = int_matrix({{2, 0}, {0, 3}});
  const auto s = smith_normal_form(m);
  CHECK(s.divisors == std::vector<Integer>{1, 6});
  check_smith(m, s);

  // Chart weights of x1, x2, x3, x5, x6, x7 under the maximal torus.
  const IntMatrix w = int_matrix({{1, 0, 1, -1, 0, -1}, {0, 1, -1, 1, -1, 0}});
  const auto sw = smith_normal_form(w);
  CHECK(sw.divisors == std::vector<Integer>{1, 1});
  CHECK(sw.D == int_matrix({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}));
  check_smith(w, sw);
}

TEST_CASE("Smith form on random integer matrices up to 8x8") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    IntMatrix m(r, c, Integer(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = trial % 4 == 0 ? entry(rng) * 2 : entry(rng);
    check_smith(m, smith_normal_form(m));
  }
}

TEST_CASE("Bareiss determinant") {
  CHECK(integer_determinant(int_matrix({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}})) == 6);
  CHECK(integer_determinant(int_matrix({{0, 1}, {1, 0}})) == -1);
  CHECK(integer_determinant(int_matrix({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("integer solving") {
  const IntMatrix a = int_matrix({{2, 0}, {0, 3}});
  const auto x = solve_integer(a, {4, 9});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK_FALSE(solve_integer(a, {1, 0}).has_value());
}
