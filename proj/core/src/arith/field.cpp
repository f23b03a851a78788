#include "g2cert/arith/field.hpp"

#include <ostream>
#include <sstream>

#include "g2cert/error.hpp"
#include "qpoly.hpp"

namespace g2cert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct Field::Impl {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t p = 0;
  std::vector<Rational> modulus;  // monic, constant first
  std::string generator = "t";
};

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_integer(const Integer& n, std::uint64_t p) {
  Integer r = n % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::string poly_text(const std::vector<Rational>& c, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    Rational coef = c[k];
    if (!first) {
      os << (coef.sign() < 0 ? " - " : " + ");
      coef = coef.abs();
    } else if (coef.sign() < 0 && k > 0) {
      os << "-";
      coef = coef.abs();
    }
    first = false;
    if (k == 0) {
      os << coef;
      continue;
    }
    if (!coef.is_one()) os << coef << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

Field Field::rationals() {
  static const Field q(std::make_shared<const Impl>());
  return q;
}

Field Field::prime(std::uint64_t p, std::uint64_t cap) {
  if (!is_prime(p)) throw UsageError("not a prime modulus: " + std::to_string(p));
  if (p > cap || p > kMaxPrime)
    throw UnsupportedError("prime " + std::to_string(p) + " exceeds the configured cap " + std::to_string(cap));
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::prime;
  impl->p = p;
  return Field(std::move(impl));
}

Field Field::number_field(std::vector<Rational> f, std::string generator) {
  qpoly::trim(f);
  if (f.size() < 2) throw PreconditionError("number field modulus must have positive degree");
  const std::size_t deg = f.size() - 1;
  if (!f.back().is_one()) throw PreconditionError("number field modulus must be monic");
  if (deg > kMaxNumberFieldDegree)
    throw UnsupportedError("number field degree " + std::to_string(deg) + " exceeds cap 6");
  if (deg > kMaxCertifiedDegree)
    throw UnsupportedError("irreducibility of degree " + std::to_string(deg) +
                           " moduli cannot be certified (rational-root test covers degree <= 3)");
  if (deg > 1 && !qpoly::rational_roots(f).empty())
    throw PreconditionError("number field modulus " + poly_text(f, "x") + " has a rational root");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::number_field;
  impl->modulus = std::move(f);
  impl->generator = std::move(generator);
  return Field(std::move(impl));
}

FieldKind Field::kind() const { return impl_->kind; }

std::uint64_t Field::characteristic() const { return impl_->kind == FieldKind::prime ? impl_->p : 0; }

std::size_t Field::degree() const {
  return impl_->kind == FieldKind::number_field ? impl_->modulus.size() - 1 : 1;
}

std::uint64_t Field::modulus_prime() const {
  if (impl_->kind != FieldKind::prime) throw DomainMismatchError("not a prime field");
  return impl_->p;
}

const std::vector<Rational>& Field::defining_polynomial() const { return impl_->modulus; }

const std::string& Field::generator_name() const { return impl_->generator; }

std::string Field::name() const {
  switch (impl_->kind) {
    case FieldKind::rationals: return "QQ";
    case FieldKind::prime: return "GF(" + std::to_string(impl_->p) + ")";
    case FieldKind::number_field:
      return "QQ[" + impl_->generator + "]/(" + poly_text(impl_->modulus, impl_->generator) + ")";
  }
  return "?";
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->kind == b.impl_->kind && a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }
Scalar Field::from_int(long n) const { return from_integer(Integer(n)); }
Scalar Field::from_integer(const Integer& n) const { return from_rational(Rational(n)); }

Scalar Field::from_rational(const Rational& q) const {
  switch (impl_->kind) {
    case FieldKind::rationals: return Scalar(*this, q);
    case FieldKind::prime: {
      const std::uint64_t d = reduce_integer(q.den(), impl_->p);
      if (d == 0)
        throw ArithmeticError("denominator of " + q.to_string() + " vanishes in GF(" + std::to_string(impl_->p) + ")");
      const std::uint64_t n = reduce_integer(q.num(), impl_->p);
      return Scalar(*this, n * mod_pow(d, impl_->p - 2, impl_->p) % impl_->p);
    }
    case FieldKind::number_field: {
      std::vector<Rational> c(degree());
      c[0] = q;
      return Scalar(*this, std::move(c));
    }
  }
  throw StructuralError("unknown field kind");
}

Scalar Field::embed(const Scalar& s) const {
  if (s.field() == *this) return s;
  if (s.field().kind() == FieldKind::rationals) return from_rational(s.to_rational());
  throw DomainMismatchError("cannot embed " + s.field().name() + " into " + name());
}

Scalar Field::generator() const {
  if (impl_->kind != FieldKind::number_field) throw DomainMismatchError(name() + " has no generator");
  std::vector<Rational> c(degree());
  if (degree() == 1)
    c[0] = -impl_->modulus[0];
  else
    c[1] = 1;
  return Scalar(*this, std::move(c));
}

Scalar Field::element(std::vector<Rational> coordinates) const {
  if (impl_->kind != FieldKind::number_field) {
    if (coordinates.size() != 1) throw DomainMismatchError("element(): expected one coordinate");
    return from_rational(coordinates[0]);
  }
  return Scalar(*this, qpoly::reduce(coordinates, impl_->modulus));
}

// ---------------------------------------------------------------------------

Scalar::Scalar() : field_(Field::rationals()), rep_(Rational()) {}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw DomainMismatchError("mixed-field operands: " + field_.name() + " and " + o.field_.name());
}

bool Scalar::is_zero() const {
  switch (rep_.index()) {
    case 0: return std::get<0>(rep_).is_zero();
    case 1: return std::get<1>(rep_) == 0;
    default:
      for (const auto& c : std::get<2>(rep_))
        if (!c.is_zero()) return false;
      return true;
  }
}

bool Scalar::is_one() const {
  switch (rep_.index()) {
    case 0: return std::get<0>(rep_).is_one();
    case 1: return std::get<1>(rep_) == 1;
    default: {
      const auto& c = std::get<2>(rep_);
      for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
      return c[0].is_one();
    }
  }
}

Scalar Scalar::inv() const {
  if (is_zero()) throw ArithmeticError("division by zero in " + field_.name());
  switch (rep_.index()) {
    case 0: return Scalar(field_, std::get<0>(rep_).inv());
    case 1: {
      const std::uint64_t p = field_.impl_->p;
      return Scalar(field_, mod_pow(std::get<1>(rep_), p - 2, p));
    }
    default: {
      const auto& f = field_.impl_->modulus;
      auto [g, s, t] = qpoly::xgcd(std::get<2>(rep_), f);
      if (g.size() != 1) throw StructuralError("number field modulus is not irreducible");
      return Scalar(field_, qpoly::reduce(s, f));
    }
  }
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result = field_.one();
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  switch (rep_.index()) {
    case 0: std::get<0>(rep_) += std::get<0>(o.rep_); break;
    case 1: std::get<1>(rep_) = (std::get<1>(rep_) + std::get<1>(o.rep_)) % field_.impl_->p; break;
    default: {
      auto& a = std::get<2>(rep_);
      const auto& b = std::get<2>(o.rep_);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  switch (rep_.index()) {
    case 0: std::get<0>(rep_) *= std::get<0>(o.rep_); break;
    case 1: std::get<1>(rep_) = std::get<1>(rep_) * std::get<1>(o.rep_) % field_.impl_->p; break;
    default:
      std::get<2>(rep_) = qpoly::reduce(qpoly::mul(std::get<2>(rep_), std::get<2>(o.rep_)), field_.impl_->modulus);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  switch (rep_.index()) {
    case 0: return Scalar(field_, -std::get<0>(rep_));
    case 1: {
      const std::uint64_t r = std::get<1>(rep_);
      return Scalar(field_, r == 0 ? 0 : field_.impl_->p - r);
    }
    default: {
      auto c = std::get<2>(rep_);
      for (auto& x : c) x = -x;
      return Scalar(field_, std::move(c));
    }
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  return a.rep_ == b.rep_;
}

Rational Scalar::to_rational() const {
  if (rep_.index() == 0) return std::get<0>(rep_);
  if (rep_.index() == 2 && is_rational()) return std::get<2>(rep_)[0];
  throw DomainMismatchError(to_string() + " in " + field_.name() + " is not a rational number");
}

bool Scalar::is_rational() const {
  if (rep_.index() == 0) return true;
  if (rep_.index() == 1) return false;
  const auto& c = std::get<2>(rep_);
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!c[i].is_zero()) return false;
  return true;
}

std::uint64_t Scalar::residue() const {
  if (rep_.index() != 1) throw DomainMismatchError("residue() on a non-prime-field element");
  return std::get<1>(rep_);
}

std::vector<Rational> Scalar::coordinates() const {
  if (rep_.index() == 0) return {std::get<0>(rep_)};
  if (rep_.index() == 2) return std::get<2>(rep_);
  throw DomainMismatchError("coordinates() on a prime-field element");
}

std::string Scalar::to_string() const {
  switch (rep_.index()) {
    case 0: return std::get<0>(rep_).to_string();
    case 1: return std::to_string(std::get<1>(rep_));
    default: return poly_text(std::get<2>(rep_), field_.generator_name());
  }
}

bool Scalar::is_compound() const {
  if (rep_.index() != 2) return false;
  int terms = 0;
  for (const auto& c : std::get<2>(rep_)) terms += c.is_zero() ? 0 : 1;
  return terms > 1;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace g2cert
