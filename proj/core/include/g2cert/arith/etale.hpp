#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2cert/arith/matrix.hpp"
#include "g2cert/arith/upoly.hpp"

namespace g2cert {

/// Matrix over Q of multiplication by a (an element of Q or of a number
/// field) in the power basis 1, t, ..., t^(d-1).
ScalarMatrix regular_representation(const Scalar& a);

struct TraceNorm {
  Rational trace;
  Rational norm;
};

/// Trace and norm down to Q of an element of Q or of a number field.
TraceNorm field_trace_norm(const Scalar& a);

/// A finite product of fields, each Q or a number field, given together
/// with a Q-basis. Elements are tuples with one entry per component.
class EtaleAlgebra {
 public:
  using Element = std::vector<Scalar>;

  /// Q^n with the coordinate (idempotent) basis.
  static EtaleAlgebra split(std::size_t n);
  /// Explicit components; basis is the concatenation of component power bases.
  static EtaleAlgebra from_components(std::vector<Field> components);
  /// Q[x]/(f) for squarefree f of degree <= 3, split into its factors over
  /// Q by the Chinese remainder theorem. The basis is 1, x, ..., x^(n-1).
  static EtaleAlgebra from_polynomial(const UniPoly& f);

  const std::vector<Field>& components() const { return components_; }
  std::size_t degree() const { return degree_; }
  /// Defining polynomial when built by from_polynomial().
  const std::optional<UniPoly>& presentation() const { return presentation_; }
  const std::vector<Element>& basis() const { return basis_; }
  /// Image of x in each component (only for from_polynomial()).
  const Element& generator() const;

  Element zero() const;
  Element one() const;
  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& c) const;
  bool is_zero(const Element& a) const;

  Element from_coordinates(const std::vector<Rational>& coords) const;
  std::vector<Rational> coordinates(const Element& a) const;

  /// Trace and norm of the multiplication operator on the whole algebra.
  TraceNorm trace_norm(const Element& a) const;

  std::string describe() const;

 private:
  void check(const Element& a) const;

  std::vector<Field> components_;
  std::size_t degree_ = 0;
  std::optional<UniPoly> presentation_;
  Element generator_;
  std::vector<Element> basis_;
};

/// nf_trace_norm for an element of an etale algebra.
TraceNorm nf_trace_norm(const EtaleAlgebra& algebra, const EtaleAlgebra::Element& a);

/// For squarefree f over Q and a root theta of f in a field K, the
/// idempotent e = g(x) / g(theta) of K[x]/(f), where f = (x - theta) g.
/// Returned as its representative of degree < deg f over K.
/// Throws PreconditionError when f(theta) != 0 or f is not squarefree.
UniPoly etale_split_idempotent(const UniPoly& f, const Scalar& theta);

/// r mod f, with f's coefficients embedded into r's field.
UniPoly reduce_mod(const UniPoly& r, const UniPoly& f);

}  // namespace g2cert
