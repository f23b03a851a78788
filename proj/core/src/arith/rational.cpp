#include "g2cert/arith/rational.hpp"

#include <ostream>

#include "g2cert/error.hpp"

namespace g2cert {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

Rational Rational::inv() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero in Q");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::string Rational::to_string() const { return value_.get_str(); }

std::size_t Rational::hash() const {
  const std::size_t h1 = std::hash<std::string>{}(value_.get_num().get_str(16));
  const std::size_t h2 = value_.get_den() == 1 ? 0 : std::hash<std::string>{}(value_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace g2cert
