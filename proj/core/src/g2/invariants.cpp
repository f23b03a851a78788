#include "g2cert/g2/invariants.hpp"

#include "g2cert/arith/matrix.hpp"
#include "g2cert/error.hpp"

namespace g2cert {

namespace {

MultiPoly reynolds(const WeylGroup& group, const MultiPoly& f) {
  MultiPoly sum = f.ring().zero();
  for (const auto& e : group.elements()) sum = sum + act_on_cartan(e, f);
  return sum * f.ring().constant(f.field().from_int(static_cast<long>(group.order())).inv());
}

}  // namespace

MultiPoly act_on_cartan(const WeylElement& w, const MultiPoly& f) {
  const PolyRing& r = f.ring();
  if (r.nvars() != 2) throw DomainMismatchError("Cartan action needs two variables");
  const Field& k = r.field();
  const MultiPoly a = r.var(0), b = r.var(1);
  auto c = [&](int v) { return r.constant(k.from_int(v)); };
  const MultiPoly ia = c(w.lattice[0][0]) * a + c(w.lattice[1][0]) * b;
  const MultiPoly ib = c(w.lattice[0][1]) * a + c(w.lattice[1][1]) * b;
  return f.substitute({ia, ib});
}

CartanInvariants weyl_invariants_on_cartan(const WeylGroup& group, const Field& field) {
  if (field.characteristic() != 0)
    throw UnsupportedError("Weyl invariants by Reynolds averaging need characteristic 0 (got " + field.name() + ")");
  const PolyRing r(field, {"a", "b"});
  Certificate c("cartan-invariants");
  c.input("field", field.name());
  c.input("action", "a -> A11 a + A21 b, b -> A12 a + A22 b for each lattice matrix A");

  const MultiPoly f2 = reynolds(group, r.parse("a^2"));
  const std::vector<std::size_t> jac_vars = {0, 1};
  MultiPoly f6 = r.zero();
  std::string seed;
  for (int i = 6; i >= 0 && f6.is_zero(); --i) {
    const MultiPoly m = r.monomial({i, 6 - i}, field.one());
    const MultiPoly avg = reynolds(group, m);
    if (avg.is_zero()) continue;
    const Matrix<MultiPoly> j = jacobian({f2, avg}, jac_vars);
    if ((j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0)).is_zero()) continue;
    f6 = avg;
    seed = m.to_string();
  }
  c.require(!f2.is_zero() && f2.is_homogeneous() && f2.total_degree() == 2, "f2 = R(a^2) = " + f2.to_string());
  c.require(!f6.is_zero() && f6.is_homogeneous() && f6.total_degree() == 6,
            "f6 = R(" + seed + ") = " + (f6.is_zero() ? std::string("0") : f6.to_string()));
  if (f6.is_zero()) throw StructuralError("no degree-6 invariant independent of f2");

  bool invariant = true;
  for (const auto& e : group.elements())
    invariant = invariant && act_on_cartan(e, f2) == f2 && act_on_cartan(e, f6) == f6;
  c.require(invariant, "f2 and f6 fixed by all " + std::to_string(group.order()) + " elements");
  const Matrix<MultiPoly> j = jacobian({f2, f6}, jac_vars);
  const MultiPoly det = j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0);
  c.require(!det.is_zero(), "Jacobian determinant d(f2,f6)/d(a,b) = " + det.to_string());
  c.require(2 * 6 == static_cast<int>(group.order()), "deg f2 * deg f6 = 12 = |W|");
  return {r, f2, f6, std::move(c)};
}

Certificate generic_freeness_certificate(const IntMatrix& weights) {
  Certificate c("generic-freeness");
  std::string rows;
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    rows += i ? "; " : "";
    for (std::size_t j = 0; j < weights.cols(); ++j) rows += (j ? " " : "") + weights(i, j).get_str();
  }
  c.input("weights", "[" + rows + "]");
  const SmithForm s = smith_normal_form(weights);
  std::string divisors;
  bool units = true;
  for (const auto& d : s.divisors) {
    divisors += (divisors.empty() ? "" : ",") + d.get_str();
    units = units && d == 1;
  }
  c.witness("elementary divisors (" + divisors + ")");
  c.require(s.rank() == weights.rows(), "weight matrix has full row rank " + std::to_string(s.rank()));
  c.require(units, units ? "all elementary divisors are 1: common kernel of the characters is trivial"
                         : "elementary divisor > 1: a nontrivial finite subgroup (e.g. mu_" +
                               (s.divisors.empty() ? std::string("?") : s.divisors.back().get_str()) + ") fixes every point");
  return c;
}

Certificate generic_freeness_certificate() { return generic_freeness_certificate(build_weight_table().chart_matrix()); }

}  // namespace g2cert
