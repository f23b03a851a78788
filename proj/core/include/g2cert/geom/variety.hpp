#pragma once

#include <string>
#include <vector>

#include "g2cert/arith/smith.hpp"
#include "g2cert/certificate.hpp"
#include "g2cert/mpoly/ideal.hpp"
#include "g2cert/mpoly/ratfunc.hpp"

namespace g2cert {

enum class AmbientKind { affine, projective };

/// Closed subvariety of affine or projective space cut out by an ideal in
/// the ring of ambient coordinates.
class VarietyDescriptor {
 public:
  /// Projective equations must be homogeneous and the ideal must be proper
  /// (PreconditionError otherwise).
  VarietyDescriptor(std::string name, AmbientKind kind, PolyRing ring, std::vector<MultiPoly> equations);

  const std::string& name() const { return name_; }
  AmbientKind kind() const { return kind_; }
  bool projective() const { return kind_ == AmbientKind::projective; }
  const PolyRing& ring() const { return ideal_.ring(); }
  const IdealBasis& ideal() const { return ideal_; }
  /// Dimension of the ambient space.
  std::size_t ambient_dimension() const;
  std::string describe() const;

  /// Same ring, kind and generators (names are labels only).
  friend bool operator==(const VarietyDescriptor& a, const VarietyDescriptor& b);

 private:
  std::string name_;
  AmbientKind kind_;
  IdealBasis ideal_;
};

/// Rational map given by one coordinate representative. Coordinates live in
/// the fraction field of the source ring. For a projective target they are
/// cleared to polynomials that are homogeneous of a common degree.
class RationalMapDescriptor {
 public:
  RationalMapDescriptor(std::string name, VarietyDescriptor source, VarietyDescriptor target,
                        std::vector<RationalFunction> coordinates);
  /// Convenience constructor from polynomial coordinates.
  RationalMapDescriptor(std::string name, VarietyDescriptor source, VarietyDescriptor target,
                        const std::vector<MultiPoly>& coordinates);

  const std::string& name() const { return name_; }
  const VarietyDescriptor& source() const { return source_; }
  const VarietyDescriptor& target() const { return target_; }
  const std::vector<RationalFunction>& coordinates() const { return coords_; }
  std::string describe() const;

 private:
  std::string name_;
  VarietyDescriptor source_;
  VarietyDescriptor target_;
  std::vector<RationalFunction> coords_;
};

/// Substitution x_i -> c_i * x_{perm[i]} on a polynomial ring. As a map on
/// points it sends x to (c_i x_{perm[i]})_i, so the pullback of a function f
/// is apply(f).
class MonomialAction {
 public:
  MonomialAction(std::string label, PolyRing ring, std::vector<std::size_t> perm, std::vector<Scalar> scalars);
  static MonomialAction identity(const PolyRing& ring);
  /// Pure permutation with unit scalars.
  static MonomialAction permutation(std::string label, const PolyRing& ring, std::vector<std::size_t> perm);

  const std::string& label() const { return label_; }
  const PolyRing& ring() const { return ring_; }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<Scalar>& scalars() const { return scalars_; }

  MultiPoly apply(const MultiPoly& f) const;
  RationalFunction apply(const RationalFunction& f) const;
  /// Substitution s_this o s_other, i.e. f -> apply(other.apply(f)).
  MonomialAction after(const MonomialAction& other) const;
  MonomialAction inverse() const;
  bool is_identity() const;
  /// True when every generator of the ideal is mapped into the ideal.
  bool preserves(const IdealBasis& ideal) const;

  friend bool operator==(const MonomialAction& a, const MonomialAction& b);

 private:
  std::string label_;
  PolyRing ring_;
  std::vector<std::size_t> perm_;
  std::vector<Scalar> scalars_;
};

/// Composite psi o phi; phi's target must equal psi's source. Projective
/// coordinates are cleared of denominators and of common monomial factors.
RationalMapDescriptor compose(const RationalMapDescriptor& phi, const RationalMapDescriptor& psi);

/// Identity map of a variety.
RationalMapDescriptor identity_map(const VarietyDescriptor& v);

/// Every target equation pulls back into the source ideal, and not every
/// coordinate lies in the source ideal.
Certificate check_well_defined(const RationalMapDescriptor& phi);

/// Whether two coordinate tuples on `source` define the same rational map
/// into a space of the given kind: 2x2 minors (projective) or differences
/// (affine) reduce to zero modulo the source ideal.
Certificate check_maps_agree(const VarietyDescriptor& source, AmbientKind target_kind,
                             const std::vector<RationalFunction>& a, const std::vector<RationalFunction>& b,
                             const std::string& name);

/// Both maps well defined, psi o phi = id on the source of phi, and
/// phi o psi = id on the source of psi.
Certificate check_birational_pair(const RationalMapDescriptor& phi, const RationalMapDescriptor& psi);

struct ActionPair {
  MonomialAction on_source;
  MonomialAction on_target;
};

/// phi o sigma_source = sigma_target o phi modulo the source ideal, for every
/// pair, after checking that each action preserves its variety.
Certificate check_equivariant(const RationalMapDescriptor& phi, const std::vector<ActionPair>& pairs);

/// Description of a torus quotient on an affine chart.
struct QuotientData {
  VarietyDescriptor chart;
  /// Names and monomial formulas (in the chart ring) of the invariants.
  std::vector<std::string> invariant_names;
  std::vector<RationalFunction> invariants;
  /// Torus weights, one column per chart variable.
  IntMatrix weights;
  /// Relations among the invariants, in the ring with variables invariant_names.
  std::vector<MultiPoly> relations;
  /// Recovery identities: chart variable name and an expression in the ring
  /// whose variables are the chart variables followed by the invariant names.
  std::vector<std::pair<std::string, RationalFunction>> recoveries;
};

/// Certifies (a) zero weights, (b) index-1 invariant lattice, (c) relations
/// and (d) recovery identities modulo the chart ideal.
Certificate quotient_generators_check(const QuotientData& data);

}  // namespace g2cert
