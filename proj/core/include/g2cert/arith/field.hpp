#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "g2cert/arith/rational.hpp"

namespace g2cert {

class Scalar;

enum class FieldKind { rationals, prime, number_field };

/// Default cap on prime-field moduli. Characteristic-p work here is spot
/// checking, so small primes are the norm; callers can raise the cap.
inline constexpr std::uint64_t kDefaultPrimeCap = 97;

/// Hard limit keeping residue products inside 64 bits.
inline constexpr std::uint64_t kMaxPrime = 2147483647ULL;

/// Number fields are capped at degree 6 (the size of a cubic times
/// quadratic torsor algebra); irreducibility can only be certified up to
/// degree 3, so larger moduli are rejected at construction.
inline constexpr std::size_t kMaxNumberFieldDegree = 6;
inline constexpr std::size_t kMaxCertifiedDegree = 3;

bool is_prime(std::uint64_t n);

/// Immutable handle to a coefficient field: Q, F_p, or Q[t]/(f).
/// Copies share the same descriptor; equality is structural.
class Field {
 public:
  static Field rationals();
  static Field prime(std::uint64_t p, std::uint64_t cap = kDefaultPrimeCap);
  /// Q[t]/(f) for a monic f given constant term first. f must be
  /// irreducible over Q; this is certified here, not assumed.
  static Field number_field(std::vector<Rational> monic_coefficients, std::string generator = "t");

  FieldKind kind() const;
  std::uint64_t characteristic() const;
  /// Degree over the prime field (1 for Q and F_p).
  std::size_t degree() const;
  std::uint64_t modulus_prime() const;
  /// Defining polynomial of a number field, constant term first, monic.
  const std::vector<Rational>& defining_polynomial() const;
  const std::string& generator_name() const;
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long n) const;
  Scalar from_integer(const Integer& n) const;
  Scalar from_rational(const Rational& q) const;
  /// Embeds an element of Q, or an element of this same field, into this field.
  Scalar embed(const Scalar& s) const;
  /// The class of t in Q[t]/(f).
  Scalar generator() const;
  /// Element of a number field from its power-basis coordinates.
  Scalar element(std::vector<Rational> coordinates) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend class Scalar;
};

/// Exact element of a Field. All operations check that operands share a
/// field and throw DomainMismatchError otherwise.
class Scalar {
 public:
  /// Rational zero.
  Scalar();

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar inv() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Value of a Q element, or of a number-field element lying in Q.
  Rational to_rational() const;
  bool is_rational() const;
  std::uint64_t residue() const;
  /// Power-basis coordinates (length = degree) for number fields; {q} for Q.
  std::vector<Rational> coordinates() const;

  /// Canonical text: "3/2", "5", "1/6*t^2 + 1/3".
  std::string to_string() const;
  /// True when to_string() needs parentheses as a factor in a product.
  bool is_compound() const;

 private:
  using Rep = std::variant<Rational, std::uint64_t, std::vector<Rational>>;
  Scalar(Field f, Rep rep) : field_(std::move(f)), rep_(std::move(rep)) {}
  void require_same(const Scalar& o) const;

  Field field_;
  Rep rep_;
  friend class Field;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace g2cert
