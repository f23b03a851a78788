#pragma once

#include <string>
#include <vector>

#include "g2cert/arith/etale.hpp"
#include "g2cert/arith/matrix.hpp"
#include "g2cert/certificate.hpp"
#include "g2cert/geom/variety.hpp"

namespace g2cert {

/// q(x) = sum_{i <= j} a_ij x_i x_j, stored as an upper-triangular matrix.
/// This is the only coefficient layout that works in characteristic 2.
class QuadraticForm {
 public:
  /// The zero form in n variables.
  QuadraticForm(Field field, std::size_t n);
  /// From a square matrix whose strictly lower part must be zero.
  explicit QuadraticForm(const ScalarMatrix& upper);
  /// From a homogeneous quadratic polynomial (PreconditionError otherwise).
  static QuadraticForm from_polynomial(const MultiPoly& q);

  const Field& field() const { return field_; }
  std::size_t dimension() const { return upper_.rows(); }
  /// a_ij for i <= j; the two indices may be given in either order.
  const Scalar& coeff(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  const ScalarMatrix& matrix() const { return upper_; }

  /// q(x); coordinates may live in an extension of the base field.
  Scalar eval(const std::vector<Scalar>& x) const;
  /// q as a polynomial in the variables of `ring`.
  MultiPoly polynomial(const PolyRing& ring) const;
  /// q(P(x)) for a vector of univariate polynomials over Q.
  UniPoly eval(const std::vector<UniPoly>& p) const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.upper_ == b.upper_; }
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  Field field_;
  ScalarMatrix upper_;
};

/// The form Z1 Z2 + Y2 Y3 + Y1 Y3 + Y1 Y2 in the coordinates (Y1, Y2, Y3, Z1, Z2).
QuadraticForm lambda4_form(const Field& k = Field::rationals());

/// Symmetric matrix of b(x, y) = q(x + y) - q(x) - q(y): a_ij off the
/// diagonal and 2 a_ii on it, valid in every characteristic.
ScalarMatrix bilinearize(const QuadraticForm& q);

/// Outside characteristic 2: smooth iff det b != 0. In characteristic 2
/// the singular points are the radical vectors on the quadric; over F_2 the
/// form is additive on the radical, so a radical line is smooth iff q of
/// its generator is nonzero and a radical of dimension >= 2 always meets
/// the quadric. A singular point found is reported in the witnesses.
Certificate is_smooth_quadric(const QuadraticForm& q);

/// Pair of etale algebras presenting an S3 x S2 torsor, with Q-bases.
struct TwistData {
  EtaleAlgebra cubic;
  EtaleAlgebra quadratic;

  /// Q[x]/(cubic) and Q[x]/(quadratic) with power bases. Both must be
  /// monic squarefree of degrees exactly 3 and 2.
  static TwistData from_polynomials(const UniPoly& cubic, const UniPoly& quadratic);
  /// Q^3 and Q^2 with coordinate bases.
  static TwistData split();
  std::string describe() const;
};

/// q(y, z) = s2(y) + N(z) on E3 (+) E2, where s2(y) = ((Tr y)^2 - Tr(y^2)) / 2
/// and N is the norm of E2; coordinates are the chosen Q-bases.
QuadraticForm twist_form(const TwistData& zeta);

/// Certifies that the twisted form becomes the split form over the
/// universal splitting algebra of the two defining polynomials: with roots
/// r1, r2, r3 and s1, s2, the substitution Y_k = sum_i y_i r_k^i,
/// Z_k = sum_i z_i s_k^i turns the split form into the twisted one modulo
/// the splitting relations. Only for TwistData built from polynomials.
Certificate twist_congruence_certificate(const TwistData& zeta);

/// Coordinates of a point on a quadric over some field.
struct QuadricPoint {
  Field field;
  std::vector<Scalar> coordinates;
  std::string to_string() const;
};

struct Degree3Point {
  QuadricPoint point;
  Certificate certificate;
};

/// The point of the twisted quadric coming from a primitive idempotent of
/// E3 (x) K, with z = 0 and denominators cleared. K is the cubic field
/// Q(theta) when the cubic is irreducible, and Q when it has a rational
/// root; the split algebra gives the coordinate point (1, 0, 0, 0, 0).
Degree3Point degree3_point(const TwistData& zeta);

struct DescentResult {
  QuadricPoint point;
  /// "rational", "top-degree", "cofactor-root" or "identically-zero".
  std::string branch;
  Certificate certificate;
};

/// Turns a point over Q or over a number field of degree 3 into a nonzero
/// rational point, following the proof of Springer's theorem: write P as a
/// primitive vector of polynomials of degree < 3 in the generator; if the
/// top-degree coefficient vector is isotropic it is returned, otherwise
/// q(P(x)) = f(x) g(x) with g linear and P at the root of g is returned,
/// and if q(P(x)) vanishes identically any nonzero value of P is used.
/// PreconditionError when q(P) != 0; UnsupportedError for even degree or
/// degree above 3. The output is in lowest terms and certified.
DescentResult springer_descend(const QuadraticForm& q, const QuadricPoint& p);

/// Projective quadric {q = 0} in the given coordinate names (X1.. by default).
VarietyDescriptor quadric_variety(const QuadraticForm& q, std::vector<std::string> names = {});

struct Parametrization {
  RationalMapDescriptor forward;   // P^(n-2) -> quadric
  RationalMapDescriptor backward;  // quadric -> P^(n-2)
  Certificate certificate;
};

/// Projection from a smooth rational point p. With j the first index
/// where p is nonzero, lines are parametrized by u in the hyperplane
/// X_j = 0 (coordinates u1..u(n-1), X_j omitted) and
///   forward(u) = q(u) p - b(p, u) u,   backward(x) = p_j x - x_j p.
/// PreconditionError when q(p) != 0 or p lies in the radical of b.
Parametrization stereographic_param(const QuadraticForm& q, const std::vector<Scalar>& p,
                                    std::vector<std::string> names = {});

}  // namespace g2cert
