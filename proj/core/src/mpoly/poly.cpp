#include "g2cert/mpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "g2cert/error.hpp"

namespace g2cert {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::min(a[i], b[i]);
  return m;
}

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(Field field, std::vector<std::string> names)
    : impl_(std::make_shared<const Impl>(Impl{std::move(field), std::move(names)})) {
  for (std::size_t i = 0; i < nvars(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (impl_->names[i] == impl_->names[j]) throw UsageError("duplicate variable name " + impl_->names[i]);
}

std::size_t PolyRing::index_of(const std::string& name) const {
  const auto& n = names();
  const auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) throw UsageError("unknown variable " + name);
  return static_cast<std::size_t>(it - n.begin());
}

MultiPoly PolyRing::zero() const { return MultiPoly(*this); }

MultiPoly PolyRing::one() const { return constant(field().one()); }

MultiPoly PolyRing::constant(const Scalar& c) const { return monomial(Monomial(nvars(), 0), c); }

MultiPoly PolyRing::constant(long c) const { return constant(field().from_int(c)); }

MultiPoly PolyRing::var(std::size_t i) const {
  if (i >= nvars()) throw UsageError("variable index out of range");
  Monomial m(nvars(), 0);
  m[i] = 1;
  return monomial(m, field().one());
}

MultiPoly PolyRing::var(const std::string& name) const { return var(index_of(name)); }

std::vector<MultiPoly> PolyRing::vars() const {
  std::vector<MultiPoly> v;
  for (std::size_t i = 0; i < nvars(); ++i) v.push_back(var(i));
  return v;
}

MultiPoly PolyRing::monomial(const Monomial& m, const Scalar& c) const {
  if (m.size() != nvars()) throw DomainMismatchError("monomial length differs from variable count");
  MultiPoly p(*this);
  p.add_term(m, field().embed(c));
  return p;
}

bool operator==(const PolyRing& a, const PolyRing& b) {
  return a.impl_ == b.impl_ || (a.field() == b.field() && a.names() == b.names());
}

namespace {

class Parser {
 public:
  Parser(const PolyRing& ring, const std::string& text) : ring_(ring), s_(text) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("cannot parse polynomial \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  MultiPoly expr() {
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    MultiPoly acc = term();
    if (negative) acc = -acc;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (accept('^')) base = base.pow(static_cast<unsigned>(std::stoul(digits())));
    return base;
  }

  MultiPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      const std::size_t save = pos_;
      if (accept('/')) {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
          num += "/" + digits();
        else
          pos_ = save;
      }
      return ring_.constant(ring_.field().from_rational(Rational::parse(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      const auto& names = ring_.names();
      if (std::find(names.begin(), names.end(), name) != names.end()) return ring_.var(name);
      if (ring_.field().kind() == FieldKind::number_field && name == ring_.field().generator_name())
        return ring_.constant(ring_.field().generator());
      fail("unknown variable " + name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const PolyRing& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly PolyRing::parse(const std::string& text) const { return Parser(*this, text).run(); }

// ---------------------------------------------------------------------------
// MultiPoly

void MultiPoly::require_same(const MultiPoly& o) const {
  if (!(ring_ == o.ring_)) throw DomainMismatchError("polynomials live in different rings");
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

bool MultiPoly::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second.is_one(); }

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = g2cert::total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return g2cert::total_degree(t.first) == d; });
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) throw PreconditionError("degree of the zero polynomial");
  // The first term in grevlex order has maximal total degree.
  return g2cert::total_degree(terms_.begin()->first);
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::vector<std::size_t> MultiPoly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_.nvars(); ++i)
    if (degree_in(i) > 0) out.push_back(i);
  return out;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw PreconditionError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

const Scalar& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

Scalar MultiPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? field().zero() : it->second;
}

Scalar MultiPoly::constant_term() const { return coefficient(Monomial(ring_.nvars(), 0)); }

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same(b);
  MultiPoly out(a.ring_);
  const std::size_t n = a.ring_.nvars();
  Monomial m(n);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly out(ring_);
  if (c.is_zero()) return out;
  const Scalar k = field().embed(c);
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * k);
  return out;
}

MultiPoly MultiPoly::mul_term(const Monomial& mono, const Scalar& c) const {
  MultiPoly out(ring_);
  if (c.is_zero()) return out;
  const Scalar k = field().embed(c);
  for (const auto& [m, v] : terms_) {
    Monomial e = m;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += mono[i];
    // Multiplying by a monomial preserves the term order.
    out.terms_.emplace_hint(out.terms_.end(), std::move(e), v * k);
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = ring_.one(), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inv());
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= ring_.nvars()) throw UsageError("derivative: variable index out of range");
  MultiPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial e = m;
    --e[var];
    out.add_term(e, c * field().from_int(m[var]));
  }
  return out;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
  if (point.size() != ring_.nvars()) throw DomainMismatchError("eval: point has the wrong dimension");
  Scalar acc = field().zero();
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= field().embed(point[i]).pow(m[i]);
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != ring_.nvars()) throw DomainMismatchError("substitute: one image per variable required");
  if (images.empty()) throw DomainMismatchError("substitute: empty assignment");
  const PolyRing& target = images.front().ring();
  // Powers are cached per variable since the same images recur across terms.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(target.one());
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = target.constant(target.field().embed(c));
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= power(i, m[i]);
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::in_ring(const PolyRing& target, bool by_name) const {
  if (!by_name && target.nvars() != ring_.nvars()) throw DomainMismatchError("in_ring: variable counts differ");
  const auto& tn = target.names();
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    Monomial e(target.nvars(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!by_name) {
        e[i] = m[i];
        continue;
      }
      if (m[i] == 0) continue;
      const auto it = std::find(tn.begin(), tn.end(), ring_.names()[i]);
      if (it == tn.end()) throw DomainMismatchError("in_ring: variable " + ring_.names()[i] + " missing from target");
      e[static_cast<std::size_t>(it - tn.begin())] = m[i];
    }
    out.add_term(e, target.field().embed(c));
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& divisor) const {
  require_same(divisor);
  if (divisor.is_zero()) throw ArithmeticError("division by the zero polynomial");
  MultiPoly rest = *this, quotient(ring_);
  const Monomial& lm = divisor.leading_monomial();
  const Scalar lc_inv = divisor.leading_coefficient().inv();
  while (!rest.is_zero()) {
    const Monomial& top = rest.leading_monomial();
    if (!divides(lm, top)) return std::nullopt;
    Monomial q(top.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = top[i] - lm[i];
    const Scalar c = rest.leading_coefficient() * lc_inv;
    quotient.add_term(q, c);
    rest -= divisor.mul_term(q, c);
  }
  return quotient;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return grlex_greater(x.first, y.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    std::string coef = c.to_string();
    const bool compound = c.is_compound();
    bool negative = !compound && !coef.empty() && coef[0] == '-';
    if (negative) coef = coef.substr(1);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      factors.push_back(ring_.names()[i] + (m[i] > 1 ? "^" + std::to_string(m[i]) : ""));
    }
    const bool unit = coef == "1";
    if (factors.empty()) {
      os << (compound ? "(" + coef + ")" : coef);
      continue;
    }
    if (!unit) os << (compound ? "(" + coef + ")" : coef) << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

Matrix<MultiPoly> jacobian(const std::vector<MultiPoly>& fs, const std::vector<std::size_t>& vars) {
  if (fs.empty()) throw PreconditionError("jacobian of an empty list");
  Matrix<MultiPoly> j(fs.size(), vars.size(), fs.front().ring().zero());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t k = 0; k < vars.size(); ++k) j(i, k) = fs[i].derivative(vars[k]);
  return j;
}

}  // namespace g2cert
