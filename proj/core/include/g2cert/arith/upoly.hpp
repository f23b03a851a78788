#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2cert/arith/field.hpp"

namespace g2cert {

/// Dense univariate polynomial over a Field, constant term first.
/// The zero polynomial has no degree: degree() returns std::nullopt.
class UniPoly {
 public:
  explicit UniPoly(Field field) : field_(std::move(field)) {}
  UniPoly(Field field, std::vector<Scalar> coefficients);

  static UniPoly from_rationals(const std::vector<Rational>& coefficients);
  static UniPoly from_ints(const Field& field, const std::vector<long>& coefficients);
  static UniPoly x(const Field& field);
  static UniPoly constant(const Scalar& c);

  const Field& field() const { return field_; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k (zero past the degree).
  Scalar coeff(std::size_t k) const;
  Scalar leading_coefficient() const;

  UniPoly monic() const;
  UniPoly derivative() const;
  Scalar eval(const Scalar& x) const;
  /// Coefficients mapped into another field (Q -> anything, or identity).
  UniPoly embed(const Field& target) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  UniPoly operator-() const;
  UniPoly scaled(const Scalar& c) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  /// Quotient and remainder; throws ArithmeticError on division by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  UniPoly operator%(const UniPoly& divisor) const { return divmod(divisor).second; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  void require_same(const UniPoly& o) const;

  Field field_;
  std::vector<Scalar> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly upoly_gcd(const UniPoly& f, const UniPoly& g);

struct Factor {
  UniPoly factor;
  int multiplicity;
};

/// Factorization over Q of a polynomial of degree at most 3. Linear factors
/// come first, ordered by root; the product with multiplicity is monic(f).
/// Every factor of degree 2 or 3 is certified irreducible by the
/// rational-root test. Throws UnsupportedError for degree > 3.
std::vector<Factor> upoly_factor_small(const UniPoly& f);

/// Distinct rational roots of a nonzero polynomial over Q, ascending.
std::vector<Rational> rational_roots(const UniPoly& f);

}  // namespace g2cert
