#include "g2cert/arith/upoly.hpp"

#include <sstream>

#include "g2cert/error.hpp"
#include "qpoly.hpp"

namespace g2cert {

UniPoly::UniPoly(Field field, std::vector<Scalar> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c = field_.embed(c);
  trim();
}

UniPoly UniPoly::from_rationals(const std::vector<Rational>& coefficients) {
  const Field q = Field::rationals();
  std::vector<Scalar> c;
  c.reserve(coefficients.size());
  for (const auto& r : coefficients) c.push_back(q.from_rational(r));
  return UniPoly(q, std::move(c));
}

UniPoly UniPoly::from_ints(const Field& field, const std::vector<long>& coefficients) {
  std::vector<Scalar> c;
  c.reserve(coefficients.size());
  for (long v : coefficients) c.push_back(field.from_int(v));
  return UniPoly(field, std::move(c));
}

UniPoly UniPoly::x(const Field& field) { return UniPoly(field, {field.zero(), field.one()}); }

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(c.field(), {c}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UniPoly::require_same(const UniPoly& o) const {
  if (!(field_ == o.field_))
    throw DomainMismatchError("polynomials over different fields: " + field_.name() + ", " + o.field_.name());
}

std::optional<std::size_t> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Scalar UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }

Scalar UniPoly::leading_coefficient() const {
  if (coeffs_.empty()) throw ArithmeticError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::monic() const {
  if (coeffs_.empty()) return *this;
  return scaled(coeffs_.back().inv());
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * field_.from_int(static_cast<long>(k)));
  return UniPoly(field_, std::move(d));
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc = field_.zero();
  const Scalar xx = field_.embed(x);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xx + *it;
  return acc;
}

UniPoly UniPoly::embed(const Field& target) const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const auto& s : coeffs_) c.push_back(target.embed(s));
  return UniPoly(target, std::move(c));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  require_same(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  require_same(o);
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> r(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly UniPoly::scaled(const Scalar& c) const {
  UniPoly r = *this;
  const Scalar cc = field_.embed(c);
  for (auto& x : r.coeffs_) x *= cc;
  r.trim();
  return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  a.require_same(b);
  return a.coeffs_ == b.coeffs_;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  require_same(divisor);
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  UniPoly r = *this;
  const std::size_t dd = divisor.coeffs_.size();
  if (r.coeffs_.size() < dd) return {UniPoly(field_), r};
  std::vector<Scalar> q(r.coeffs_.size() - dd + 1, field_.zero());
  const Scalar lead_inv = divisor.coeffs_.back().inv();
  while (!r.coeffs_.empty() && r.coeffs_.size() >= dd) {
    const std::size_t shift = r.coeffs_.size() - dd;
    const Scalar c = r.coeffs_.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < dd; ++i) r.coeffs_[shift + i] -= c * divisor.coeffs_[i];
    r.trim();
  }
  return {UniPoly(field_, std::move(q)), r};
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string text = c.to_string();
    bool negative = !c.is_compound() && !text.empty() && text[0] == '-';
    if (negative) text.erase(0, 1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    const bool unit = text == "1";
    if (c.is_compound()) text = "(" + text + ")";
    if (k == 0) {
      os << text;
      continue;
    }
    if (!unit) os << text << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UniPoly upoly_gcd(const UniPoly& f, const UniPoly& g) {
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<Rational> rational_roots(const UniPoly& f) {
  if (f.field().kind() != FieldKind::rationals) throw DomainMismatchError("rational_roots() needs a polynomial over QQ");
  std::vector<Rational> c;
  for (const auto& s : f.coefficients()) c.push_back(s.to_rational());
  return qpoly::rational_roots(c);
}

std::vector<Factor> upoly_factor_small(const UniPoly& f) {
  if (f.field().kind() != FieldKind::rationals)
    throw DomainMismatchError("upoly_factor_small() factors over QQ only");
  if (f.is_zero()) throw ArithmeticError("factorization of the zero polynomial");
  if (*f.degree() > 3)
    throw UnsupportedError("upoly_factor_small(): degree " + std::to_string(*f.degree()) + " > 3 unsupported");
  const Field& q = f.field();
  std::vector<Factor> out;
  UniPoly rest = f.monic();
  for (const Rational& r : rational_roots(rest)) {
    const UniPoly linear(q, {q.from_rational(-r), q.one()});
    int mult = 0;
    while (true) {
      auto [quot, rem] = rest.divmod(linear);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++mult;
    }
    out.push_back({linear, mult});
  }
  if (*rest.degree() > 0) {
    // deg <= 3 with no rational root: irreducible.
    if (!rational_roots(rest).empty()) throw StructuralError("residual factor still has a rational root");
    out.push_back({rest, 1});
  }
  return out;
}

}  // namespace g2cert
