#include "g2cert/mpoly/ratfunc.hpp"

#include <algorithm>

#include "g2cert/arith/upoly.hpp"
#include "g2cert/error.hpp"

namespace g2cert {

namespace {

// Single variable occurring in p, if exactly one does.
std::optional<std::size_t> sole_variable(const MultiPoly& p) {
  const auto s = p.support();
  if (s.size() == 1) return s.front();
  return std::nullopt;
}

UniPoly to_univariate(const MultiPoly& p, std::size_t var) {
  std::vector<Scalar> c(static_cast<std::size_t>(p.degree_in(var)) + 1, p.field().zero());
  for (const auto& [m, v] : p.terms()) c[static_cast<std::size_t>(m[var])] = v;
  return UniPoly(p.field(), std::move(c));
}

MultiPoly from_univariate(const UniPoly& u, const PolyRing& ring, std::size_t var) {
  MultiPoly p(ring);
  Monomial m(ring.nvars(), 0);
  for (std::size_t k = 0; k < u.coefficients().size(); ++k) {
    m[var] = static_cast<int>(k);
    p.add_term(m, u.coefficients()[k]);
  }
  return p;
}

Monomial content_monomial(const MultiPoly& p) {
  Monomial g = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms()) g = monomial_gcd(g, m);
  return g;
}

MultiPoly divide_by_monomial(const MultiPoly& p, const Monomial& g) {
  Monomial neg(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
  return p.mul_term(neg, p.field().one());
}

}  // namespace

RationalFunction::RationalFunction(const MultiPoly& numerator) : num_(numerator), den_(numerator.ring().one()) {}

RationalFunction::RationalFunction(const MultiPoly& numerator, const MultiPoly& denominator)
    : num_(numerator), den_(denominator) {
  if (!(num_.ring() == den_.ring())) throw DomainMismatchError("rational function parts live in different rings");
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = num_.ring().one();
    return;
  }
  if (den_.is_one()) return;
  const Scalar lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    const Scalar k = lc.inv();
    num_ = num_.scaled(k);
    den_ = den_.scaled(k);
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(den_.leading_coefficient().inv());
    den_ = num_.ring().one();
    return;
  }
  const Monomial g = monomial_gcd(content_monomial(num_), content_monomial(den_));
  if (total_degree(g) > 0) {
    num_ = divide_by_monomial(num_, g);
    den_ = divide_by_monomial(den_, g);
  }
  if (auto q = num_.exact_divide(den_)) {
    num_ = std::move(*q);
    den_ = num_.ring().one();
    return;
  }
  const auto vd = sole_variable(den_);
  const auto vn = sole_variable(num_);
  if (vd && (num_.is_constant() || (vn && *vn == *vd))) {
    const UniPoly un = to_univariate(num_, *vd), ud = to_univariate(den_, *vd);
    const UniPoly g1 = upoly_gcd(un, ud);
    if (g1.degree().value_or(0) > 0) {
      num_ = from_univariate(un.divmod(g1).first, num_.ring(), *vd);
      den_ = from_univariate(ud.divmod(g1).first, num_.ring(), *vd);
      const Scalar k = den_.leading_coefficient().inv();
      num_ = num_.scaled(k);
      den_ = den_.scaled(k);
      if (den_.is_one()) return;
    }
  }
}

const MultiPoly& RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw PreconditionError("rational function " + to_string() + " is not a polynomial");
  return num_;
}

RationalFunction RationalFunction::inv() const {
  if (num_.is_zero()) throw ArithmeticError("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) return *this = RationalFunction(num_ + o.num_, den_);
  return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inv(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (!(a.ring() == b.ring())) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  const bool bare_num = num_.size() == 1 && !num_.terms().begin()->second.is_compound();
  // A product in the denominator needs parentheses: a/b*c would read as (a/b)*c.
  const std::string den_text = den_.to_string();
  const bool bare_den = den_.size() == 1 && den_text.find('*') == std::string::npos;
  return (bare_num ? num_.to_string() : "(" + num_.to_string() + ")") + "/" + (bare_den ? den_text : "(" + den_text + ")");
}

std::vector<RationalFunction> identity_assignment(const PolyRing& ring) {
  std::vector<RationalFunction> out;
  for (const auto& v : ring.vars()) out.emplace_back(v);
  return out;
}

RationalFunction mp_substitute(const MultiPoly& f, const std::vector<RationalFunction>& assignment) {
  if (assignment.size() != f.ring().nvars())
    throw UsageError("mp_substitute: " + std::to_string(assignment.size()) + " images for " +
                     std::to_string(f.ring().nvars()) + " variables");
  if (assignment.empty()) throw UsageError("mp_substitute: empty assignment");
  const PolyRing& target = assignment.front().ring();
  for (const auto& a : assignment)
    if (!(a.ring() == target)) throw DomainMismatchError("mp_substitute: images live in different rings");

  const bool polynomial = std::all_of(assignment.begin(), assignment.end(),
                                      [](const RationalFunction& a) { return a.is_polynomial(); });
  if (polynomial) {
    std::vector<MultiPoly> images;
    for (const auto& a : assignment) images.push_back(a.num());
    return RationalFunction(f.substitute(images));
  }

  // Common denominator D and numerators m_i with a_i = m_i / D.
  const bool monomial = std::all_of(assignment.begin(), assignment.end(),
                                    [](const RationalFunction& a) { return a.den().is_monomial(); });
  MultiPoly d = target.one();
  if (monomial) {
    Monomial l(target.nvars(), 0);
    for (const auto& a : assignment) l = monomial_lcm(l, a.den().leading_monomial());
    d = target.monomial(l, target.field().one());
  } else {
    std::vector<MultiPoly> distinct;
    for (const auto& a : assignment)
      if (std::find(distinct.begin(), distinct.end(), a.den()) == distinct.end()) distinct.push_back(a.den());
    for (const auto& p : distinct) d *= p;
  }
  std::vector<MultiPoly> numerators;
  for (const auto& a : assignment) numerators.push_back(a.num() * *d.exact_divide(a.den()));

  if (f.is_zero()) return RationalFunction(target.zero());
  const int delta = f.total_degree();
  std::vector<MultiPoly> d_powers{target.one()};
  for (int k = 1; k <= delta; ++k) d_powers.push_back(d_powers.back() * d);
  MultiPoly n(target);
  // Homogenize each term to degree delta in (m_1, ..., m_n, D).
  const MultiPoly::Terms& terms = f.terms();
  for (const auto& [m, c] : terms) {
    MultiPoly t = target.constant(target.field().embed(c));
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= numerators[i].pow(static_cast<unsigned>(m[i]));
    t *= d_powers[static_cast<std::size_t>(delta - total_degree(m))];
    n += t;
  }
  return RationalFunction(n, d_powers.back());
}

}  // namespace g2cert
