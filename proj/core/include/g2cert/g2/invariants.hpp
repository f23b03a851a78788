#pragma once

#include "g2cert/arith/smith.hpp"
#include "g2cert/certificate.hpp"
#include "g2cert/g2/weyl.hpp"
#include "g2cert/mpoly/poly.hpp"

namespace g2cert {

/// Homogeneous generators of the invariant ring of W acting on the Cartan
/// subalgebra. The variables a, b are the characters t1, t2 viewed as
/// linear functions on t; an element acts by its lattice matrix.
struct CartanInvariants {
  PolyRing ring;
  MultiPoly f2;
  MultiPoly f6;
  /// Invariance under all 12 elements, nonzero Jacobian, degree product 12.
  Certificate certificate;
};

/// Reynolds averages of a^2 and of the first degree-6 monomial whose
/// average is algebraically independent of f2. UnsupportedError in positive
/// characteristic, where averaging over the group divides by 12.
CartanInvariants weyl_invariants_on_cartan(const WeylGroup& group, const Field& field = Field::rationals());

/// Substitution a -> A11 a + A21 b, b -> A12 a + A22 b.
MultiPoly act_on_cartan(const WeylElement& w, const MultiPoly& f);

/// Smith normal form of a 2 x n weight matrix: elementary divisors all 1
/// and full rank means the common kernel of the characters is trivial, so
/// the torus acts generically freely in every characteristic.
Certificate generic_freeness_certificate(const IntMatrix& weights);
/// The same for the chart weights of the quadric.
Certificate generic_freeness_certificate();

}  // namespace g2cert
