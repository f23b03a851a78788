#pragma once

// Dense univariate helpers over Q used underneath Scalar, where the public
// UniPoly (which is built on Scalar) is not yet available.

#include <tuple>
#include <vector>

#include "g2cert/arith/rational.hpp"

namespace g2cert::qpoly {

using Coeffs = std::vector<Rational>;  // constant term first

void trim(Coeffs& a);
Coeffs mul(const Coeffs& a, const Coeffs& b);
std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b);
/// a mod f for monic f, padded to exactly deg f coefficients.
Coeffs reduce(const Coeffs& a, const Coeffs& f);
/// (g, s, t) with s*a + t*b = g, g monic (or zero when a = b = 0).
std::tuple<Coeffs, Coeffs, Coeffs> xgcd(const Coeffs& a, const Coeffs& b);
Rational eval(const Coeffs& a, const Rational& x);
/// Distinct rational roots in increasing order (rational-root test on the
/// primitive integer model). The zero polynomial is rejected.
std::vector<Rational> rational_roots(const Coeffs& a);

}  // namespace g2cert::qpoly
