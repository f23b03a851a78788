#pragma once

#include <random>
#include <vector>

#include "g2cert/arith/field.hpp"
#include "g2cert/mpoly/poly.hpp"

namespace g2cert::testing {

inline Rational random_rational(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Scalar random_scalar(std::mt19937_64& rng, const Field& k) {
  switch (k.kind()) {
    case FieldKind::rationals: return k.from_rational(random_rational(rng));
    case FieldKind::prime: {
      std::uniform_int_distribution<long> d(0, static_cast<long>(k.modulus_prime()) - 1);
      return k.from_int(d(rng));
    }
    case FieldKind::number_field: {
      std::vector<Rational> c;
      for (std::size_t i = 0; i < k.degree(); ++i) c.push_back(random_rational(rng, 5));
      return k.element(c);
    }
  }
  return k.zero();
}

/// Sparse random polynomial with up to `terms` terms of degree <= max_degree.
inline MultiPoly random_poly(std::mt19937_64& rng, const PolyRing& ring, int terms = 4, int max_degree = 3) {
  std::uniform_int_distribution<int> count(0, terms), var(0, static_cast<int>(ring.nvars()) - 1),
      deg(0, max_degree);
  MultiPoly p = ring.zero();
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m(ring.nvars(), 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++m[static_cast<std::size_t>(var(rng))];
    p.add_term(m, random_scalar(rng, ring.field()));
  }
  return p;
}

}  // namespace g2cert::testing
