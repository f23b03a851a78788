#include "g2cert/geom/variety.hpp"

#include <algorithm>
#include <sstream>

#include "g2cert/error.hpp"
#include "g2cert/mpoly/lattice.hpp"

namespace g2cert {

namespace {

std::string join(const std::vector<RationalFunction>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " : " : "") + v[i].to_string();
  return s + ")";
}

// Common monomial factor of the nonzero entries.
Monomial monomial_content(const std::vector<MultiPoly>& ps, std::size_t n) {
  std::optional<Monomial> g;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms()) g = g ? monomial_gcd(*g, m) : m;
  return g.value_or(Monomial(n, 0));
}

// Projective coordinates as polynomials: multiply through by a common
// denominator, then strip the common monomial factor.
std::vector<RationalFunction> clear_projective(const std::vector<RationalFunction>& coords) {
  if (coords.empty()) return coords;
  const PolyRing& ring = coords.front().ring();
  const bool monomial =
      std::all_of(coords.begin(), coords.end(), [](const RationalFunction& f) { return f.den().is_monomial(); });
  MultiPoly d = ring.one();
  if (monomial) {
    Monomial l(ring.nvars(), 0);
    for (const auto& f : coords) l = monomial_lcm(l, f.den().leading_monomial());
    d = ring.monomial(l, ring.field().one());
  } else {
    std::vector<MultiPoly> distinct;
    for (const auto& f : coords)
      if (std::find(distinct.begin(), distinct.end(), f.den()) == distinct.end()) distinct.push_back(f.den());
    for (const auto& p : distinct) d *= p;
  }
  std::vector<MultiPoly> polys;
  for (const auto& f : coords) polys.push_back(f.num() * *d.exact_divide(f.den()));
  Monomial g = monomial_content(polys, ring.nvars());
  for (auto& e : g) e = -e;
  std::vector<RationalFunction> out;
  for (const auto& p : polys) out.emplace_back(p.mul_term(g, ring.field().one()));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// VarietyDescriptor

VarietyDescriptor::VarietyDescriptor(std::string name, AmbientKind kind, PolyRing ring,
                                     std::vector<MultiPoly> equations)
    : name_(std::move(name)), kind_(kind), ideal_(std::move(ring), std::move(equations)) {
  if (projective()) {
    if (ideal_.ring().nvars() < 2) throw PreconditionError(name_ + ": projective space needs two coordinates");
    for (const auto& g : ideal_.generators())
      if (!g.is_homogeneous()) throw PreconditionError(name_ + ": non-homogeneous equation " + g.to_string());
  }
  if (ideal_.is_unit()) throw PreconditionError(name_ + ": the ideal is the unit ideal");
}

std::size_t VarietyDescriptor::ambient_dimension() const {
  return projective() ? ring().nvars() - 1 : ring().nvars();
}

std::string VarietyDescriptor::describe() const {
  std::ostringstream os;
  os << name_ << " in " << (projective() ? "P^" : "A^") << ambient_dimension() << " (";
  for (std::size_t i = 0; i < ring().nvars(); ++i) os << (i ? (projective() ? ":" : ",") : "") << ring().names()[i];
  os << "): {" << ideal_.to_string() << "}";
  return os.str();
}

bool operator==(const VarietyDescriptor& a, const VarietyDescriptor& b) {
  return a.kind_ == b.kind_ && a.ring() == b.ring() && a.ideal_.generators() == b.ideal_.generators();
}

// ---------------------------------------------------------------------------
// RationalMapDescriptor

RationalMapDescriptor::RationalMapDescriptor(std::string name, VarietyDescriptor source, VarietyDescriptor target,
                                             std::vector<RationalFunction> coordinates)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)), coords_(std::move(coordinates)) {
  if (coords_.size() != target_.ring().nvars())
    throw PreconditionError(name_ + ": " + std::to_string(coords_.size()) + " coordinates for a target with " +
                            std::to_string(target_.ring().nvars()));
  for (const auto& c : coords_)
    if (!(c.ring() == source_.ring())) throw DomainMismatchError(name_ + ": coordinate outside the source ring");
  if (target_.projective()) {
    coords_ = clear_projective(coords_);
    if (!source_.projective()) return;
    std::optional<int> degree;
    for (const auto& c : coords_) {
      if (c.is_zero()) continue;
      if (!c.num().is_homogeneous() || (degree && *degree != c.num().total_degree()))
        throw PreconditionError(name_ + ": projective coordinates are not homogeneous of one degree");
      degree = c.num().total_degree();
    }
    if (!degree) throw PreconditionError(name_ + ": all coordinates vanish");
  }
}

RationalMapDescriptor::RationalMapDescriptor(std::string name, VarietyDescriptor source, VarietyDescriptor target,
                                             const std::vector<MultiPoly>& coordinates)
    : RationalMapDescriptor(std::move(name), std::move(source), std::move(target), [&] {
        std::vector<RationalFunction> r;
        for (const auto& p : coordinates) r.emplace_back(p);
        return r;
      }()) {}

std::string RationalMapDescriptor::describe() const {
  return name_ + ": " + source_.name() + " -> " + target_.name() + " " + join(coords_);
}

// ---------------------------------------------------------------------------
// MonomialAction

MonomialAction::MonomialAction(std::string label, PolyRing ring, std::vector<std::size_t> perm,
                               std::vector<Scalar> scalars)
    : label_(std::move(label)), ring_(std::move(ring)), perm_(std::move(perm)), scalars_(std::move(scalars)) {
  const std::size_t n = ring_.nvars();
  if (perm_.size() != n || scalars_.size() != n) throw PreconditionError(label_ + ": action size mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm_[i] >= n || seen[perm_[i]]) throw PreconditionError(label_ + ": not a permutation");
    seen[perm_[i]] = true;
    scalars_[i] = ring_.field().embed(scalars_[i]);
    if (scalars_[i].is_zero()) throw PreconditionError(label_ + ": zero scalar makes the action singular");
  }
}

MonomialAction MonomialAction::identity(const PolyRing& ring) {
  std::vector<std::size_t> perm(ring.nvars());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  return permutation("id", ring, std::move(perm));
}

MonomialAction MonomialAction::permutation(std::string label, const PolyRing& ring, std::vector<std::size_t> perm) {
  std::vector<Scalar> ones(ring.nvars(), ring.field().one());
  return MonomialAction(std::move(label), ring, std::move(perm), std::move(ones));
}

MultiPoly MonomialAction::apply(const MultiPoly& f) const {
  if (!(f.ring() == ring_)) throw DomainMismatchError(label_ + ": polynomial outside the action's ring");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < perm_.size(); ++i) images.push_back(ring_.var(perm_[i]).scaled(scalars_[i]));
  return f.substitute(images);
}

RationalFunction MonomialAction::apply(const RationalFunction& f) const {
  return RationalFunction(apply(f.num()), apply(f.den()));
}

MonomialAction MonomialAction::after(const MonomialAction& other) const {
  if (!(other.ring_ == ring_)) throw DomainMismatchError("composing actions on different rings");
  std::vector<std::size_t> perm(perm_.size());
  std::vector<Scalar> scalars;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    perm[i] = perm_[other.perm_[i]];
    scalars.push_back(other.scalars_[i] * scalars_[other.perm_[i]]);
  }
  return MonomialAction(label_ + "*" + other.label_, ring_, std::move(perm), std::move(scalars));
}

MonomialAction MonomialAction::inverse() const {
  std::vector<std::size_t> perm(perm_.size());
  std::vector<Scalar> scalars(perm_.size(), ring_.field().one());
  for (std::size_t i = 0; i < perm_.size(); ++i) perm[perm_[i]] = i;
  for (std::size_t j = 0; j < perm_.size(); ++j) scalars[j] = scalars_[perm[j]].inv();
  return MonomialAction(label_ + "^-1", ring_, std::move(perm), std::move(scalars));
}

bool MonomialAction::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i || !scalars_[i].is_one()) return false;
  return true;
}

bool MonomialAction::preserves(const IdealBasis& ideal) const {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const MultiPoly& g) { return ideal.contains(apply(g)); });
}

bool operator==(const MonomialAction& a, const MonomialAction& b) {
  return a.ring_ == b.ring_ && a.perm_ == b.perm_ && a.scalars_ == b.scalars_;
}

// ---------------------------------------------------------------------------
// Maps

RationalMapDescriptor compose(const RationalMapDescriptor& phi, const RationalMapDescriptor& psi) {
  if (!(phi.target() == psi.source()))
    throw DomainMismatchError("compose: target of " + phi.name() + " is not the source of " + psi.name());
  std::vector<RationalFunction> coords;
  for (const auto& c : psi.coordinates()) {
    const RationalFunction den = mp_substitute(c.den(), phi.coordinates());
    if (phi.source().ideal().contains(den.num()))
      throw PreconditionError("compose: a denominator of " + psi.name() + " vanishes on the image of " + phi.name());
    coords.push_back(mp_substitute(c.num(), phi.coordinates()) / den);
  }
  return RationalMapDescriptor(psi.name() + " o " + phi.name(), phi.source(), psi.target(), std::move(coords));
}

RationalMapDescriptor identity_map(const VarietyDescriptor& v) {
  return RationalMapDescriptor("id", v, v, identity_assignment(v.ring()));
}

Certificate check_well_defined(const RationalMapDescriptor& phi) {
  Certificate cert("well-defined");
  cert.input("map", phi.describe());
  cert.input("source", phi.source().describe());
  cert.input("target", phi.target().describe());
  const IdealBasis& src = phi.source().ideal();
  for (const auto& g : phi.target().ideal().generators()) {
    const RationalFunction pulled = mp_substitute(g, phi.coordinates());
    const MultiPoly r = src.normal_form(pulled.num());
    cert.require(r.is_zero(), "pullback of " + g.to_string() + " reduces to " + r.to_string());
  }
  bool all_in_ideal = true;
  for (const auto& c : phi.coordinates()) {
    if (!src.contains(c.num())) all_in_ideal = false;
    if (src.contains(c.den())) cert.require(false, "denominator " + c.den().to_string() + " vanishes on the source");
  }
  cert.require(!all_in_ideal, all_in_ideal ? "every coordinate vanishes on the source" : "some coordinate is nonzero on the source");
  return cert;
}

Certificate check_maps_agree(const VarietyDescriptor& source, AmbientKind target_kind,
                             const std::vector<RationalFunction>& a, const std::vector<RationalFunction>& b,
                             const std::string& name) {
  Certificate cert(name);
  cert.input("first", join(a));
  cert.input("second", join(b));
  if (a.size() != b.size()) {
    cert.require(false, "coordinate counts differ");
    return cert;
  }
  const IdealBasis& ideal = source.ideal();
  std::size_t checked = 0, failed = 0;
  if (target_kind == AmbientKind::projective) {
    const auto pa = clear_projective(a), pb = clear_projective(b);
    auto vanishes = [&](const std::vector<RationalFunction>& v) {
      return std::all_of(v.begin(), v.end(), [&](const RationalFunction& f) { return ideal.contains(f.num()); });
    };
    if (vanishes(pa) || vanishes(pb)) cert.require(false, "a coordinate tuple vanishes identically on the source");
    for (std::size_t i = 0; i < pa.size(); ++i)
      for (std::size_t j = i + 1; j < pa.size(); ++j) {
        const MultiPoly minor = pa[i].num() * pb[j].num() - pa[j].num() * pb[i].num();
        const MultiPoly r = ideal.normal_form(minor);
        ++checked;
        if (!r.is_zero()) {
          ++failed;
          cert.require(false, "minor (" + std::to_string(i) + "," + std::to_string(j) + ") reduces to " + r.to_string());
        }
      }
    cert.witness(std::to_string(checked - failed) + " of " + std::to_string(checked) + " 2x2 minors reduce to 0");
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const RationalFunction d = a[i] - b[i];
      const MultiPoly r = ideal.normal_form(d.num());
      ++checked;
      if (!r.is_zero()) {
        ++failed;
        cert.require(false, "coordinate " + std::to_string(i) + " difference reduces to " + r.to_string());
      }
    }
    cert.witness(std::to_string(checked - failed) + " of " + std::to_string(checked) +
                 " coordinate differences reduce to 0");
  }
  return cert;
}

Certificate check_birational_pair(const RationalMapDescriptor& phi, const RationalMapDescriptor& psi) {
  Certificate cert("birational-pair");
  cert.input("forward", phi.describe());
  cert.input("backward", psi.describe());
  Certificate wf = check_well_defined(phi);
  wf.name = "forward well-defined";
  cert.absorb(wf);
  Certificate wb = check_well_defined(psi);
  wb.name = "backward well-defined";
  cert.absorb(wb);
  try {
    const auto back = compose(phi, psi);
    cert.absorb(check_maps_agree(phi.source(), phi.source().kind(), back.coordinates(),
                                 identity_assignment(phi.source().ring()), "backward o forward = id"));
    const auto fwd = compose(psi, phi);
    cert.absorb(check_maps_agree(psi.source(), psi.source().kind(), fwd.coordinates(),
                                 identity_assignment(psi.source().ring()), "forward o backward = id"));
  } catch (const Error& e) {
    cert.require(false, std::string("composition failed: ") + e.what());
  }
  return cert;
}

Certificate check_equivariant(const RationalMapDescriptor& phi, const std::vector<ActionPair>& pairs) {
  Certificate cert("equivariant");
  cert.input("map", phi.describe());
  cert.input("pairs", std::to_string(pairs.size()));
  for (const auto& [s, t] : pairs) {
    if (!(s.ring() == phi.source().ring()) || !(t.ring() == phi.target().ring())) {
      cert.require(false, s.label() + "/" + t.label() + ": action on the wrong ring");
      continue;
    }
    if (!s.preserves(phi.source().ideal())) cert.require(false, s.label() + " does not preserve " + phi.source().name());
    if (!t.preserves(phi.target().ideal())) cert.require(false, t.label() + " does not preserve " + phi.target().name());
    std::vector<RationalFunction> lhs, rhs;
    for (const auto& c : phi.coordinates()) lhs.push_back(s.apply(c));
    for (std::size_t k = 0; k < phi.coordinates().size(); ++k)
      rhs.push_back(phi.coordinates()[t.perm()[k]] * RationalFunction(phi.source().ring().constant(t.scalars()[k])));
    Certificate leg = check_maps_agree(phi.source(), phi.target().kind(), lhs, rhs, s.label() + " -> " + t.label());
    cert.absorb(leg);
  }
  if (pairs.empty()) cert.witness("no group elements: vacuously equivariant");
  return cert;
}

Certificate quotient_generators_check(const QuotientData& data) {
  Certificate cert("quotient-generators");
  const PolyRing& ring = data.chart.ring();
  cert.input("chart", data.chart.describe());
  std::string inv;
  for (std::size_t i = 0; i < data.invariants.size(); ++i)
    inv += (i ? ", " : "") + data.invariant_names.at(i) + " = " + data.invariants[i].to_string();
  cert.input("invariants", inv);
  cert.input("weights", data.weights.to_string());

  // (a) weights
  std::vector<IntVector> exponents;
  bool monomial = true;
  for (std::size_t i = 0; i < data.invariants.size(); ++i) {
    const auto& f = data.invariants[i];
    if (!f.num().is_monomial() || !f.den().is_monomial()) {
      cert.require(false, data.invariant_names[i] + " is not a Laurent monomial");
      monomial = false;
      continue;
    }
    IntVector e(ring.nvars());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = f.num().leading_monomial()[k] - f.den().leading_monomial()[k];
    const auto w = data.weights.apply(e);
    std::string ws = "(";
    bool zero = true;
    for (std::size_t k = 0; k < w.size(); ++k) {
      ws += (k ? "," : "") + w[k].get_str();
      zero = zero && w[k] == 0;
    }
    cert.require(zero, "weight of " + data.invariant_names[i] + " is " + ws + ")");
    exponents.push_back(std::move(e));
  }
  if (!monomial) return cert;

  // (b) lattice
  const KernelLattice k = laurent_kernel_lattice(data.weights);
  const SublatticeIndex idx = sublattice_index(k.basis, exponents);
  cert.require(idx.contained && idx.index && *idx.index == 1,
               "invariant monomial lattice has rank " + std::to_string(k.basis.size()) + "; span of the invariants: " +
                   idx.describe());

  auto invariant_named = [&](const std::string& name) {
    const auto it = std::find(data.invariant_names.begin(), data.invariant_names.end(), name);
    if (it == data.invariant_names.end()) throw UsageError("no invariant named " + name);
    return data.invariants[static_cast<std::size_t>(it - data.invariant_names.begin())];
  };

  // (c) relations
  for (const auto& rel : data.relations) {
    std::vector<RationalFunction> assignment;
    for (const auto& name : rel.ring().names()) assignment.push_back(invariant_named(name));
    const MultiPoly r = data.chart.ideal().normal_form(mp_substitute(rel, assignment).num());
    cert.require(r.is_zero(), "relation " + rel.to_string() + " reduces to " + r.to_string());
  }

  // (d) recovery identities
  for (const auto& [var, expr] : data.recoveries) {
    std::vector<RationalFunction> assignment;
    for (const auto& name : expr.ring().names()) {
      const auto& names = ring.names();
      if (std::find(names.begin(), names.end(), name) != names.end())
        assignment.emplace_back(ring.var(name));
      else
        assignment.push_back(invariant_named(name));
    }
    const RationalFunction value = mp_substitute(expr.num(), assignment) / mp_substitute(expr.den(), assignment);
    const MultiPoly r = data.chart.ideal().normal_form((value - RationalFunction(ring.var(var))).num());
    cert.require(r.is_zero(), var + " = " + expr.to_string() + " (difference reduces to " + r.to_string() + ")");
  }
  return cert;
}

}  // namespace g2cert
