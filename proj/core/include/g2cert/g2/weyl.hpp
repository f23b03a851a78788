#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2cert/arith/smith.hpp"
#include "g2cert/certificate.hpp"
#include "g2cert/geom/variety.hpp"

namespace g2cert {

using Weight = std::array<int, 2>;

/// Torus weights of the coordinates X1..X7 of the 7-dimensional
/// representation, in the basis of characters (t1, t2).
struct WeightTable {
  std::array<Weight, 7> weights;

  /// Weight of X_i for i in 1..7.
  const Weight& of(std::size_t i) const { return weights.at(i - 1); }
  /// 2x6 weight matrix of the chart coordinates x1, x2, x3, x5, x6, x7.
  IntMatrix chart_matrix() const;
};

WeightTable build_weight_table();

using Lattice2 = std::array<std::array<int, 2>, 2>;

/// Permutation of X1..X7 fixing X4 that is linear on the weights:
/// lattice * w_i = w_{sigma(i)} for all i. Indices are 0-based (X1 -> 0).
struct WeylElement {
  std::array<std::size_t, 7> sigma;
  Lattice2 lattice;
  /// Canonical label "s3:<pair permutation>,s2:<+|->".
  std::string name;

  bool is_identity() const;
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.sigma == b.sigma; }
};

/// Permutation with unit scalars induced on (y1, y2, y3, z1, z2) by the
/// substitution x_i -> x_{sigma(i)}; perm[j] = k means generator j maps to
/// generator k.
struct InducedAction {
  std::array<std::size_t, 5> perm;
  /// Pair permutation on the y's (0-based) and whether z1, z2 are swapped.
  std::array<std::size_t, 3> y_perm() const { return {perm[0], perm[1], perm[2]}; }
  bool swaps_z() const { return perm[3] == 4; }
  friend bool operator==(const InducedAction& a, const InducedAction& b) { return a.perm == b.perm; }
};

class WeylGroup {
 public:
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const WeylElement& identity() const;
  /// (a o b)(i) = a(b(i)), lattice A_a * A_b.
  WeylElement compose(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& a) const;
  const WeylElement& find(const std::array<std::size_t, 7>& sigma) const;
  const WeylElement& by_name(const std::string& name) const;
  std::size_t element_order(const WeylElement& a) const;

  /// Certificate that the synthesized group is dihedral of order 12,
  /// contains the antipodal element, has an order-6 subgroup inducing S3 on
  /// the antipodal pairs, and preserves the quadric.
  const Certificate& certificate() const { return cert_; }

 private:
  friend WeylGroup synthesize_weyl_group();
  std::vector<WeylElement> elements_;
  Certificate cert_;
};

/// Enumerates the permutations of {1,2,3,5,6,7} admitting a consistent
/// lattice matrix and certifies the group structure. A failing leg raises
/// StructuralError.
WeylGroup synthesize_weyl_group();

/// The substitution X_i -> X_{sigma(i)} on the ring of the quadric.
MonomialAction quadric_action(const WeylElement& w, const PolyRing& ring);
/// The substitution x_i -> x_{sigma(i)} on the chart (x1, x2, x3, x5, x6, x7).
MonomialAction chart_action(const WeylElement& w, const PolyRing& chart_ring);

/// Action on the invariant monomials, each image expressed by exact
/// lattice solving and required to be one of the five generators
/// (StructuralError otherwise).
InducedAction induced_action_on_model(const WeylElement& w);

/// Induced action as a substitution on one of the models.
MonomialAction model_action(const WeylElement& w, const VarietyDescriptor& model);

/// Certifies that the induced actions form a group of order 12 acting as
/// S3 x S2, with the kernel of the z-swap an S3 fixing both z's, the
/// antipodal element swapping the z's and fixing the y's, and that the
/// induced map is a homomorphism.
Certificate certify_induced_action(const WeylGroup& group);

}  // namespace g2cert
