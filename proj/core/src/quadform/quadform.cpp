#include "g2cert/quadform/quadform.hpp"

#include <numeric>

#include "g2cert/error.hpp"

namespace g2cert {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  return names;
}

std::string vector_text(const std::vector<Scalar>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

// Rational coordinates of a scalar of Q or of a number field.
std::vector<Rational> rational_coordinates(const Scalar& s) {
  if (s.field().kind() == FieldKind::rationals) return {s.to_rational()};
  return s.coordinates();
}

// Scales a vector by a positive rational so that all its rational
// coordinates are integers with gcd 1.
std::vector<Scalar> lowest_terms(const std::vector<Scalar>& v) {
  Integer den = 1, content = 0;
  for (const auto& s : v)
    for (const auto& c : rational_coordinates(s)) den = lcm(den, c.den());
  for (const auto& s : v)
    for (const auto& c : rational_coordinates(s)) content = gcd(content, (c * Rational(den)).num());
  if (content == 0) return v;
  const Field& k = v.front().field();
  const Scalar factor = k.from_rational(Rational(den, content));
  std::vector<Scalar> out;
  for (const auto& s : v) out.push_back(s * factor);
  return out;
}

bool all_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

QuadraticForm::QuadraticForm(Field field, std::size_t n) : field_(field), upper_(n, n, field.zero()) {}

QuadraticForm::QuadraticForm(const ScalarMatrix& upper) : field_(upper.zero().field()), upper_(upper) {
  if (upper.rows() != upper.cols()) throw PreconditionError("quadratic form needs a square coefficient matrix");
  for (std::size_t i = 0; i < upper.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!upper(i, j).is_zero()) throw PreconditionError("quadratic form coefficients must be upper triangular");
}

QuadraticForm QuadraticForm::from_polynomial(const MultiPoly& q) {
  QuadraticForm form(q.field(), q.ring().nvars());
  for (const auto& [m, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < m.size(); ++v)
      for (int e = 0; e < m[v]; ++e) idx.push_back(v);
    if (idx.size() != 2) throw PreconditionError("not a quadratic form: " + q.to_string());
    form.upper_(idx[0], idx[1]) = c;
  }
  return form;
}

const Scalar& QuadraticForm::coeff(std::size_t i, std::size_t j) const {
  return i <= j ? upper_(i, j) : upper_(j, i);
}

void QuadraticForm::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i > j) std::swap(i, j);
  upper_(i, j) = field_.embed(v);
}

Scalar QuadraticForm::eval(const std::vector<Scalar>& x) const {
  if (x.size() != dimension()) throw DomainMismatchError("point has the wrong number of coordinates");
  const Field& k = x.empty() ? field_ : x.front().field();
  Scalar sum = k.zero();
  for (std::size_t i = 0; i < dimension(); ++i)
    for (std::size_t j = i; j < dimension(); ++j)
      if (!upper_(i, j).is_zero()) sum += k.embed(upper_(i, j)) * x[i] * x[j];
  return sum;
}

MultiPoly QuadraticForm::polynomial(const PolyRing& ring) const {
  if (ring.nvars() != dimension()) throw DomainMismatchError("ring has the wrong number of variables");
  MultiPoly q = ring.zero();
  for (std::size_t i = 0; i < dimension(); ++i)
    for (std::size_t j = i; j < dimension(); ++j)
      if (!upper_(i, j).is_zero()) q = q + ring.constant(upper_(i, j)) * ring.var(i) * ring.var(j);
  return q;
}

UniPoly QuadraticForm::eval(const std::vector<UniPoly>& p) const {
  if (p.size() != dimension()) throw DomainMismatchError("point has the wrong number of coordinates");
  UniPoly sum(p.front().field());
  for (std::size_t i = 0; i < dimension(); ++i)
    for (std::size_t j = i; j < dimension(); ++j)
      if (!upper_(i, j).is_zero()) sum += (p[i] * p[j]).scaled(sum.field().embed(upper_(i, j)));
  return sum;
}

std::string QuadraticForm::to_string(const std::vector<std::string>& names) const {
  return polynomial(PolyRing(field_, names.empty() ? default_names(dimension()) : names)).to_string();
}

QuadraticForm lambda4_form(const Field& k) {
  QuadraticForm q(k, 5);
  q.set(3, 4, k.one());
  q.set(1, 2, k.one());
  q.set(0, 2, k.one());
  q.set(0, 1, k.one());
  return q;
}

ScalarMatrix bilinearize(const QuadraticForm& q) {
  const std::size_t n = q.dimension();
  ScalarMatrix b(n, n, q.field().zero());
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = q.coeff(i, i) + q.coeff(i, i);
    for (std::size_t j = i + 1; j < n; ++j) b(i, j) = b(j, i) = q.coeff(i, j);
  }
  return b;
}

Certificate is_smooth_quadric(const QuadraticForm& q) {
  if (q.dimension() < 2) throw PreconditionError("smoothness check needs at least two variables");
  Certificate c("smoothness");
  c.input("form", q.to_string({}));
  c.input("field", q.field().name());
  const ScalarMatrix b = bilinearize(q);
  const auto radical = rank_and_kernel(b).kernel;

  if (q.field().characteristic() != 2) {
    c.witness("branch: characteristic != 2, determinant of the bilinear form");
    const Scalar det = determinant(b);
    if (!det.is_zero()) {
      c.require(true, "det b = " + det.to_string() + " != 0");
    } else {
      c.require(false, "det b = 0; singular point " + vector_text(radical.front()));
    }
    return c;
  }

  c.witness("branch: characteristic 2, radical of the bilinear form");
  c.witness("radical dimension " + std::to_string(radical.size()));
  if (radical.empty()) {
    c.require(true, "bilinear form nondegenerate");
    return c;
  }
  if (radical.size() == 1) {
    const Scalar v = q.eval(radical.front());
    c.require(!v.is_zero(), "radical line " + vector_text(radical.front()) + " has q = " + v.to_string() +
                                (v.is_zero() ? ", a singular point" : " != 0"));
    return c;
  }
  if (q.field().degree() != 1)
    throw UnsupportedError("radical of dimension >= 2 is only analysed over F_2");
  // Over F_2, q is additive on the radical with q(c v) = c q(v).
  std::vector<Scalar> point = radical[0];
  if (!q.eval(radical[0]).is_zero()) {
    point = radical[1];
    if (!q.eval(radical[1]).is_zero())
      for (std::size_t i = 0; i < point.size(); ++i) point[i] = radical[0][i] + radical[1][i];
  }
  c.require(false, "radical of dimension " + std::to_string(radical.size()) + " meets the quadric at " +
                       vector_text(point) + " (q = " + q.eval(point).to_string() + ")");
  return c;
}

TwistData TwistData::from_polynomials(const UniPoly& cubic, const UniPoly& quadratic) {
  if (cubic.degree() != 3u || quadratic.degree() != 2u)
    throw PreconditionError("torsor data needs a cubic and a quadratic polynomial");
  if (!cubic.leading_coefficient().is_one() || !quadratic.leading_coefficient().is_one())
    throw PreconditionError("torsor polynomials must be monic");
  return {EtaleAlgebra::from_polynomial(cubic), EtaleAlgebra::from_polynomial(quadratic)};
}

TwistData TwistData::split() { return {EtaleAlgebra::split(3), EtaleAlgebra::split(2)}; }

std::string TwistData::describe() const { return "E3 = " + cubic.describe() + ", E2 = " + quadratic.describe(); }

QuadraticForm twist_form(const TwistData& zeta) {
  if (zeta.cubic.degree() != 3 || zeta.quadratic.degree() != 2)
    throw PreconditionError("twist needs etale algebras of degrees 3 and 2");
  const Field k = Field::rationals();
  QuadraticForm q(k, 5);
  const auto& e3 = zeta.cubic;
  const auto& b3 = e3.basis();
  std::vector<Rational> t;
  for (const auto& b : b3) t.push_back(e3.trace_norm(b).trace);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      const Rational tij = e3.trace_norm(e3.mul(b3[i], b3[j])).trace;
      const Rational a = i == j ? (t[i] * t[i] - tij) / Rational(2) : t[i] * t[j] - tij;
      q.set(i, j, k.from_rational(a));
    }
  const auto& e2 = zeta.quadratic;
  const auto& b2 = e2.basis();
  auto norm = [&](const EtaleAlgebra::Element& z) { return e2.trace_norm(z).norm; };
  for (std::size_t i = 0; i < 2; ++i) {
    q.set(3 + i, 3 + i, k.from_rational(norm(b2[i])));
    for (std::size_t j = i + 1; j < 2; ++j)
      q.set(3 + i, 3 + j, k.from_rational(norm(e2.add(b2[i], b2[j])) - norm(b2[i]) - norm(b2[j])));
  }
  return q;
}

Certificate twist_congruence_certificate(const TwistData& zeta) {
  if (!zeta.cubic.presentation() || !zeta.quadratic.presentation())
    throw PreconditionError("congruence certificate needs torsor data given by polynomials");
  const UniPoly& f = *zeta.cubic.presentation();
  const UniPoly& g = *zeta.quadratic.presentation();
  const Field q = Field::rationals();
  const PolyRing r(q, {"r1", "r2", "s1"});
  auto c = [&](const UniPoly& p, std::size_t k) { return r.constant(p.coeff(k)); };
  const MultiPoly r1 = r.var("r1"), r2 = r.var("r2"), s1 = r.var("s1");
  const MultiPoly r3 = -c(f, 2) - r1 - r2;
  const MultiPoly s2 = -c(g, 1) - s1;
  const IdealBasis splitting(r, {r1.pow(3) + c(f, 2) * r1.pow(2) + c(f, 1) * r1 + c(f, 0),
                                 r1.pow(2) + r1 * r2 + r2.pow(2) + c(f, 2) * (r1 + r2) + c(f, 1),
                                 s1.pow(2) + c(g, 1) * s1 + c(g, 0)});

  Certificate cert("twist-congruence");
  cert.input("torsor", zeta.describe());
  cert.input("splitting relations", splitting.to_string());
  cert.require(!splitting.is_unit(), "splitting algebra is nonzero");

  // Column i of C is the image of the i-th basis vector in split coordinates.
  const std::vector<MultiPoly> roots3 = {r1, r2, r3}, roots2 = {s1, s2};
  Matrix<MultiPoly> cm(5, 5, r.zero());
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i) cm(k, i) = roots3[k].pow(static_cast<unsigned>(i));
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 2; ++i) cm(3 + k, 3 + i) = roots2[k].pow(static_cast<unsigned>(i));

  auto lift = [&](const ScalarMatrix& m) {
    Matrix<MultiPoly> out(m.rows(), m.cols(), r.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r.constant(m(i, j));
    return out;
  };
  const Matrix<MultiPoly> split_gram = lift(bilinearize(lambda4_form(q)));
  const Matrix<MultiPoly> twisted_gram = lift(bilinearize(twist_form(zeta)));
  const Matrix<MultiPoly> pulled = cm.transpose() * split_gram * cm;
  bool congruent = true;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      congruent = congruent && splitting.contains(pulled(i, j) - twisted_gram(i, j));
  cert.witness("C = [r_k^i] on the cubic block, [s_k^i] on the quadratic block");
  cert.require(congruent, "C^T B_split C = B_twist modulo the splitting relations");

  // The forms themselves agree too, which matters in characteristic 2
  // where Gram matrices lose the diagonal.
  const PolyRing full(q, {"a", "b", "c", "u", "v", "r1", "r2", "s1"});
  std::vector<MultiPoly> split_coords;
  auto emb = [&](const MultiPoly& p) { return p.in_ring(full, true); };
  for (std::size_t k = 0; k < 3; ++k)
    split_coords.push_back(full.var("a") + full.var("b") * emb(roots3[k]) + full.var("c") * emb(roots3[k]).pow(2));
  for (std::size_t k = 0; k < 2; ++k) split_coords.push_back(full.var("u") + full.var("v") * emb(roots2[k]));
  const PolyRing yz(q, {"Y1", "Y2", "Y3", "Z1", "Z2"});
  const MultiPoly pulled_form = lambda4_form(q).polynomial(yz).substitute(split_coords);
  const PolyRing abcuv(q, {"a", "b", "c", "u", "v"});
  const MultiPoly twisted = twist_form(zeta).polynomial(abcuv).in_ring(full, true);
  std::vector<MultiPoly> rel;
  for (const auto& gen : splitting.generators()) rel.push_back(emb(gen));
  const IdealBasis big(full, rel);
  cert.require(big.contains(pulled_form - twisted),
               "split form at (a + b r_k + c r_k^2, u + v s_k) equals " + twisted.to_string());
  return cert;
}

std::string QuadricPoint::to_string() const { return vector_text(coordinates); }

Degree3Point degree3_point(const TwistData& zeta) {
  const Field q = Field::rationals();
  Certificate c("degree3-point");
  c.input("torsor", zeta.describe());
  const QuadraticForm form = twist_form(zeta);
  if (!zeta.cubic.presentation()) {
    QuadricPoint p{q, {q.one(), q.zero(), q.zero(), q.zero(), q.zero()}};
    c.require(form.eval(p.coordinates).is_zero(), "coordinate point " + p.to_string() + " has q = 0");
    return {p, c};
  }
  const UniPoly& f = *zeta.cubic.presentation();
  const auto rational = rational_roots(f);
  Field k = q;
  Scalar theta = q.zero();
  if (!rational.empty()) {
    theta = q.from_rational(rational.front());
    c.witness("cubic has the rational root " + theta.to_string());
  } else {
    std::vector<Rational> coeffs;
    for (const auto& s : f.coefficients()) coeffs.push_back(s.to_rational());
    k = Field::number_field(coeffs, "theta");
    theta = k.generator();
  }
  c.input("K", k.name());
  const UniPoly e = etale_split_idempotent(f, theta);
  c.witness("idempotent e = " + e.to_string());
  c.require(reduce_mod(e * e, f) == e, "e^2 = e in K[x]/(f)");

  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < 3; ++i) coords.push_back(e.coeff(i));
  coords = lowest_terms(coords);
  coords.push_back(k.zero());
  coords.push_back(k.zero());
  QuadricPoint p{k, coords};
  const Scalar value = form.eval(p.coordinates);
  c.require(value.is_zero(), "q(" + p.to_string() + ") = " + value.to_string() + " over " + k.name());
  return {p, c};
}

DescentResult springer_descend(const QuadraticForm& q, const QuadricPoint& p) {
  const Field& k = p.field;
  if (q.field().kind() != FieldKind::rationals) throw PreconditionError("descent needs a form over Q");
  if (k.kind() == FieldKind::prime) throw PreconditionError("descent needs a point over Q or a number field");
  if (all_zero(p.coordinates)) throw PreconditionError("descent needs a nonzero point");
  const Scalar value = q.eval(p.coordinates);
  if (!value.is_zero()) throw PreconditionError("point is not on the quadric: q = " + value.to_string());
  const std::size_t d = k.degree();
  if (d % 2 == 0) throw UnsupportedError("descent from an even-degree point is impossible in general");
  if (d > 3) throw UnsupportedError("descent implemented for degree at most 3");

  const Field rq = Field::rationals();
  Certificate c("springer-descent");
  c.input("form", q.to_string({}));
  c.input("point", p.to_string() + " over " + k.name());
  std::string branch;
  std::vector<Scalar> out;
  if (d == 1) {
    branch = "rational";
    for (const auto& s : p.coordinates) out.push_back(rq.from_rational(s.to_rational()));
  } else {
    std::vector<UniPoly> polys;
    for (const auto& s : p.coordinates) polys.push_back(UniPoly::from_rationals(s.coordinates()));
    UniPoly common(rq);
    for (const auto& f : polys) common = upoly_gcd(common, f);
    for (auto& f : polys) f = f.divmod(common).first;
    c.witness("common factor removed: " + common.to_string());
    const UniPoly f = UniPoly::from_rationals(k.defining_polynomial());
    const UniPoly qp = q.eval(polys);
    c.witness("q(P(x)) = " + (qp.is_zero() ? std::string("0") : qp.to_string()));
    auto at = [&](const Scalar& x0) {
      std::vector<Scalar> v;
      for (const auto& g : polys) v.push_back(g.eval(x0));
      return v;
    };
    if (qp.is_zero()) {
      branch = "identically-zero";
      for (long t = 0;; t = t <= 0 ? 1 - t : -t) {
        out = at(rq.from_int(t));
        if (!all_zero(out)) break;
      }
    } else {
      std::size_t m = 0;
      for (const auto& g : polys)
        if (g.degree()) m = std::max(m, *g.degree());
      std::vector<Scalar> top;
      for (const auto& g : polys) top.push_back(g.coeff(m));
      if (q.eval(top).is_zero()) {
        branch = "top-degree";
        out = top;
      } else {
        branch = "cofactor-root";
        const auto [cofactor, rem] = qp.divmod(f);
        c.require(rem.is_zero(), "f divides q(P(x))");
        c.witness("cofactor g = " + cofactor.to_string());
        const auto roots = rational_roots(cofactor);
        if (cofactor.degree() != 1u || roots.empty())
          throw StructuralError("descent cofactor " + cofactor.to_string() + " is not linear");
        c.witness("root x0 = " + roots.front().to_string());
        out = at(rq.from_rational(roots.front()));
      }
    }
  }
  out = lowest_terms(out);
  c.witness("branch: " + branch);
  c.require(!all_zero(out), "output " + vector_text(out) + " is nonzero");
  c.require(q.eval(out).is_zero(), "q" + vector_text(out) + " = 0 over Q");
  return {QuadricPoint{rq, out}, branch, c};
}

VarietyDescriptor quadric_variety(const QuadraticForm& q, std::vector<std::string> names) {
  if (names.empty()) names = default_names(q.dimension());
  const PolyRing r(q.field(), names);
  return VarietyDescriptor("quadric", AmbientKind::projective, r, {q.polynomial(r)});
}

Parametrization stereographic_param(const QuadraticForm& q, const std::vector<Scalar>& p,
                                    std::vector<std::string> names) {
  const std::size_t n = q.dimension();
  if (n < 3) throw PreconditionError("stereographic projection needs at least three variables");
  if (p.size() != n || all_zero(p)) throw PreconditionError("center must be a nonzero point of the right length");
  if (!q.eval(p).is_zero()) throw PreconditionError("center " + vector_text(p) + " is not on the quadric");
  const ScalarMatrix b = bilinearize(q);
  std::vector<Scalar> bp(n, q.field().zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) bp[i] += b(i, k) * p[k];
  if (all_zero(bp)) throw PreconditionError("center " + vector_text(p) + " is a singular point of the quadric");
  std::size_t j = 0;
  while (p[j].is_zero()) ++j;

  const VarietyDescriptor target = quadric_variety(q, std::move(names));
  std::vector<std::string> unames;
  for (std::size_t i = 1; i < n; ++i) unames.push_back("u" + std::to_string(i));
  const PolyRing ur(q.field(), unames);
  const VarietyDescriptor source("P" + std::to_string(n - 2), AmbientKind::projective, ur, {});

  std::vector<MultiPoly> u(n, ur.zero());
  for (std::size_t i = 0, t = 0; i < n; ++i)
    if (i != j) u[i] = ur.var(t++);
  MultiPoly qu = ur.zero(), bpu = ur.zero();
  for (std::size_t i = 0; i < n; ++i) {
    bpu = bpu + ur.constant(bp[i]) * u[i];
    for (std::size_t k = i; k < n; ++k) qu = qu + ur.constant(q.coeff(i, k)) * u[i] * u[k];
  }
  std::vector<MultiPoly> fwd;
  for (std::size_t i = 0; i < n; ++i) fwd.push_back(qu * ur.constant(p[i]) - bpu * u[i]);

  const PolyRing& xr = target.ring();
  std::vector<MultiPoly> bwd;
  for (std::size_t i = 0; i < n; ++i)
    if (i != j) bwd.push_back(xr.constant(p[j]) * xr.var(i) - xr.var(j) * xr.constant(p[i]));

  RationalMapDescriptor forward("stereographic-inverse", source, target, fwd);
  RationalMapDescriptor backward("projection", target, source, bwd);
  Certificate c = check_birational_pair(forward, backward);
  c.name = "stereographic";
  c.inputs.insert(c.inputs.begin(), {"center", vector_text(p)});
  return {forward, backward, c};
}

}  // namespace g2cert
