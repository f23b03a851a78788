#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "g2cert/arith/field.hpp"
#include "g2cert/arith/matrix.hpp"

namespace g2cert {

/// Exponent vector, one entry per ring variable. Entries may be negative
/// only when the vector is used as a Laurent exponent.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
/// Graded reverse-lexicographic comparison: true when a > b.
bool grevlex_greater(const Monomial& a, const Monomial& b);
/// Graded lexicographic comparison: true when a > b. Used for printing.
bool grlex_greater(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

class MultiPoly;

/// Polynomial ring over a Field with named variables, ordered X1 > X2 > ...
/// in the sense of the grevlex term order. Copies share one descriptor.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> names);

  const Field& field() const { return impl_->field; }
  const std::vector<std::string>& names() const { return impl_->names; }
  std::size_t nvars() const { return impl_->names.size(); }
  /// Index of a variable by name; throws UsageError when absent.
  std::size_t index_of(const std::string& name) const;

  MultiPoly zero() const;
  MultiPoly one() const;
  MultiPoly constant(const Scalar& c) const;
  MultiPoly constant(long c) const;
  MultiPoly var(std::size_t i) const;
  MultiPoly var(const std::string& name) const;
  std::vector<MultiPoly> vars() const;
  MultiPoly monomial(const Monomial& m, const Scalar& c) const;
  /// Parses canonical text such as "X1*X7 + X2*X6 - 3/2*X4^2".
  MultiPoly parse(const std::string& text) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b);

 private:
  struct Impl {
    Field field;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Sparse polynomial: map from exponent vector to nonzero coefficient,
/// iterated in descending grevlex order.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Scalar, GrevlexGreater>;

  explicit MultiPoly(PolyRing ring) : ring_(std::move(ring)) {}

  const PolyRing& ring() const { return ring_; }
  const Field& field() const { return ring_.field(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;
  /// Total degree of a nonzero polynomial (PreconditionError for zero).
  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// Indices of variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;
  Scalar coefficient(const Monomial& m) const;
  /// Constant term.
  Scalar constant_term() const;

  /// Adds c * m, dropping the term if the sum is zero.
  void add_term(const Monomial& m, const Scalar& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scaled(const Scalar& c) const;
  /// Multiplies by c * x^m.
  MultiPoly mul_term(const Monomial& m, const Scalar& c) const;
  MultiPoly pow(unsigned e) const;
  /// Leading coefficient 1 (the zero polynomial is returned unchanged).
  MultiPoly monic() const;

  /// Formal partial derivative; exponents act through the field, so
  /// d/dX (X^2) = 0 in characteristic 2.
  MultiPoly derivative(std::size_t var) const;
  /// Value at a point of field elements.
  Scalar eval(const std::vector<Scalar>& point) const;
  /// Image under a ring map sending variable i to images[i].
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// Same coefficients in another ring with the same variable count, or
  /// with variables matched by name when `by_name` is set.
  MultiPoly in_ring(const PolyRing& target, bool by_name = false) const;

  /// Exact quotient when `divisor` divides this polynomial, else nullopt.
  std::optional<MultiPoly> exact_divide(const MultiPoly& divisor) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Canonical text: descending graded-lex order, explicit '*', '^' powers.
  std::string to_string() const;

 private:
  void require_same(const MultiPoly& o) const;

  PolyRing ring_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Entry (i, j) is d fs[i] / d X_{vars[j]}.
Matrix<MultiPoly> jacobian(const std::vector<MultiPoly>& fs, const std::vector<std::size_t>& vars);

inline MultiPoly zero_like(const MultiPoly& p) { return p.ring().zero(); }
inline MultiPoly one_like(const MultiPoly& p) { return p.ring().one(); }
inline MultiPoly int_like(const MultiPoly& p, long n) { return p.ring().constant(n); }
inline bool is_zero_value(const MultiPoly& p) { return p.is_zero(); }
inline std::string text_of(const MultiPoly& p) { return p.to_string(); }

}  // namespace g2cert
