#include "g2cert/arith/etale.hpp"

#include <sstream>

#include "g2cert/error.hpp"

namespace g2cert {

ScalarMatrix regular_representation(const Scalar& a) {
  const Field q = Field::rationals();
  const Field& k = a.field();
  if (k.kind() == FieldKind::prime) throw DomainMismatchError("regular_representation() needs Q or a number field");
  const std::size_t d = k.degree();
  ScalarMatrix m = scalar_matrix(q, d, d);
  if (k.kind() == FieldKind::rationals) {
    m(0, 0) = a;
    return m;
  }
  Scalar basis_elem = k.one();
  const Scalar t = k.generator();
  for (std::size_t j = 0; j < d; ++j) {
    const std::vector<Rational> col = (a * basis_elem).coordinates();
    for (std::size_t i = 0; i < d; ++i) m(i, j) = q.from_rational(col[i]);
    basis_elem *= t;
  }
  return m;
}

TraceNorm field_trace_norm(const Scalar& a) {
  const ScalarMatrix m = regular_representation(a);
  Scalar tr = Field::rationals().zero();
  for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
  return {tr.to_rational(), determinant(m).to_rational()};
}

EtaleAlgebra EtaleAlgebra::split(std::size_t n) {
  return from_components(std::vector<Field>(n, Field::rationals()));
}

EtaleAlgebra EtaleAlgebra::from_components(std::vector<Field> components) {
  EtaleAlgebra e;
  for (const auto& f : components)
    if (f.kind() == FieldKind::prime) throw DomainMismatchError("etale algebras here are over Q");
  e.components_ = std::move(components);
  for (const auto& f : e.components_) e.degree_ += f.degree();
  if (e.degree_ > kMaxNumberFieldDegree)
    throw UnsupportedError("etale algebra degree " + std::to_string(e.degree_) + " exceeds cap 6");
  for (std::size_t c = 0; c < e.components_.size(); ++c) {
    const Field& k = e.components_[c];
    for (std::size_t j = 0; j < k.degree(); ++j) {
      Element b = e.zero();
      b[c] = k.kind() == FieldKind::number_field ? k.generator().pow(static_cast<long>(j)) : k.one();
      e.basis_.push_back(std::move(b));
    }
  }
  return e;
}

EtaleAlgebra EtaleAlgebra::from_polynomial(const UniPoly& f) {
  if (f.field().kind() != FieldKind::rationals) throw DomainMismatchError("etale presentation must be over Q");
  if (f.is_zero() || *f.degree() == 0) throw PreconditionError("etale presentation needs positive degree");
  const std::vector<Factor> factors = upoly_factor_small(f);
  std::vector<Field> comps;
  Element gen;
  for (const auto& [g, mult] : factors) {
    if (mult != 1) throw PreconditionError("polynomial " + f.to_string() + " is not squarefree");
    if (*g.degree() == 1) {
      comps.push_back(Field::rationals());
      gen.push_back(-g.coeff(0));
    } else {
      std::vector<Rational> c;
      for (const auto& s : g.coefficients()) c.push_back(s.to_rational());
      comps.push_back(Field::number_field(std::move(c), "t"));
      gen.push_back(comps.back().generator());
    }
  }
  EtaleAlgebra e = from_components(std::move(comps));
  e.presentation_ = f.monic();
  e.generator_ = gen;
  e.basis_.clear();
  Element power = e.one();
  for (std::size_t k = 0; k < e.degree_; ++k) {
    e.basis_.push_back(power);
    power = e.mul(power, gen);
  }
  return e;
}

const EtaleAlgebra::Element& EtaleAlgebra::generator() const {
  if (!presentation_) throw PreconditionError("algebra has no polynomial presentation");
  return generator_;
}

void EtaleAlgebra::check(const Element& a) const {
  if (a.size() != components_.size()) throw DomainMismatchError("element has the wrong number of components");
}

EtaleAlgebra::Element EtaleAlgebra::zero() const {
  Element z;
  for (const auto& k : components_) z.push_back(k.zero());
  return z;
}

EtaleAlgebra::Element EtaleAlgebra::one() const {
  Element z;
  for (const auto& k : components_) z.push_back(k.one());
  return z;
}

EtaleAlgebra::Element EtaleAlgebra::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

EtaleAlgebra::Element EtaleAlgebra::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] *= b[i];
  return r;
}

EtaleAlgebra::Element EtaleAlgebra::scale(const Element& a, const Rational& c) const {
  check(a);
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] *= components_[i].from_rational(c);
  return r;
}

bool EtaleAlgebra::is_zero(const Element& a) const {
  check(a);
  for (const auto& s : a)
    if (!s.is_zero()) return false;
  return true;
}

EtaleAlgebra::Element EtaleAlgebra::from_coordinates(const std::vector<Rational>& coords) const {
  if (coords.size() != degree_) throw DomainMismatchError("coordinate vector has the wrong length");
  Element r = zero();
  for (std::size_t k = 0; k < degree_; ++k) r = add(r, scale(basis_[k], coords[k]));
  return r;
}

std::vector<Rational> EtaleAlgebra::coordinates(const Element& a) const {
  check(a);
  // Columns: basis elements written in component power-basis coordinates.
  const Field q = Field::rationals();
  auto flatten = [&](const Element& x) {
    std::vector<Scalar> out;
    for (const auto& s : x)
      for (const auto& c : s.coordinates()) out.push_back(q.from_rational(c));
    return out;
  };
  ScalarMatrix m = scalar_matrix(q, degree_, degree_);
  for (std::size_t j = 0; j < degree_; ++j) {
    const auto col = flatten(basis_[j]);
    for (std::size_t i = 0; i < degree_; ++i) m(i, j) = col[i];
  }
  const auto sol = solve(m, flatten(a));
  if (!sol) throw StructuralError("etale basis does not span the algebra");
  std::vector<Rational> out;
  for (const auto& s : *sol) out.push_back(s.to_rational());
  return out;
}

TraceNorm EtaleAlgebra::trace_norm(const Element& a) const {
  check(a);
  TraceNorm tn{Rational(0), Rational(1)};
  for (const auto& s : a) {
    const TraceNorm part = field_trace_norm(s);
    tn.trace += part.trace;
    tn.norm *= part.norm;
  }
  return tn;
}

std::string EtaleAlgebra::describe() const {
  std::ostringstream os;
  if (presentation_) os << "QQ[x]/(" << presentation_->to_string() << ") = ";
  for (std::size_t i = 0; i < components_.size(); ++i) os << (i ? " x " : "") << components_[i].name();
  return os.str();
}

TraceNorm nf_trace_norm(const EtaleAlgebra& algebra, const EtaleAlgebra::Element& a) { return algebra.trace_norm(a); }

UniPoly reduce_mod(const UniPoly& r, const UniPoly& f) { return r % f.embed(r.field()); }

UniPoly etale_split_idempotent(const UniPoly& f, const Scalar& theta) {
  const Field& k = theta.field();
  const UniPoly fk = f.embed(k).monic();
  if (!fk.eval(theta).is_zero())
    throw PreconditionError("invalid root: f(" + theta.to_string() + ") != 0 for f = " + f.to_string());
  if (upoly_gcd(fk, fk.derivative()).degree() != 0u)
    throw PreconditionError("f = " + f.to_string() + " is not squarefree");
  const UniPoly linear(k, {-theta, k.one()});
  auto [g, rem] = fk.divmod(linear);
  if (!rem.is_zero()) throw StructuralError("x - theta does not divide f");
  return g.scaled(g.eval(theta).inv());
}

}  // namespace g2cert
