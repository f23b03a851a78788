#pragma once

#include <string>
#include <vector>

#include "g2cert/mpoly/poly.hpp"

namespace g2cert {

/// Quotient of two polynomials in one ring. Reduction is lazy: the
/// denominator is made monic, common monomial factors are cancelled, and
/// the fraction collapses when the denominator divides the numerator or
/// when both sides are univariate in the same variable (exact gcd). Other
/// common factors may survive; equality is decided by cross-multiplication.
class RationalFunction {
 public:
  explicit RationalFunction(const MultiPoly& numerator);
  RationalFunction(const MultiPoly& numerator, const MultiPoly& denominator);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const PolyRing& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// The numerator when the denominator is 1; PreconditionError otherwise.
  const MultiPoly& as_polynomial() const;

  RationalFunction inv() const;
  RationalFunction pow(int e) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  /// Cross-multiplication: a/b == c/d iff a*d == b*c.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// "num" when polynomial, otherwise "num/den" with parentheses around a
  /// numerator of several terms and around any denominator that is not a
  /// single power, e.g. "x2*z1/(x1*y2)".
  std::string to_string() const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

inline RationalFunction zero_like(const RationalFunction& f) { return RationalFunction(f.ring().zero()); }
inline RationalFunction one_like(const RationalFunction& f) { return RationalFunction(f.ring().one()); }
inline RationalFunction int_like(const RationalFunction& f, long n) { return RationalFunction(f.ring().constant(n)); }
inline bool is_zero_value(const RationalFunction& f) { return f.is_zero(); }
inline std::string text_of(const RationalFunction& f) { return f.to_string(); }

/// Image of f under variable i -> assignment[i]. The result is returned as
/// N / D^deg(f) where D is a common denominator of the assignment (the
/// monomial lcm when every denominator is a monomial, else the product of
/// the distinct denominators); it is then lazily reduced.
RationalFunction mp_substitute(const MultiPoly& f, const std::vector<RationalFunction>& assignment);

/// Identity assignment of a ring's variables as rational functions.
std::vector<RationalFunction> identity_assignment(const PolyRing& ring);

}  // namespace g2cert
