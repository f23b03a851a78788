#include "g2cert/g2/weyl.hpp"

#include <algorithm>
#include <set>

#include "g2cert/error.hpp"
#include "g2cert/geom/models.hpp"
#include "g2cert/mpoly/lattice.hpp"

namespace g2cert {

namespace {

constexpr std::size_t kMiddle = 3;  // X4
// Antipodal pair index of each coordinate: {X1,X7}, {X2,X6}, {X3,X5}.
constexpr std::array<int, 7> kPairOf = {0, 1, 2, -1, 2, 1, 0};
constexpr std::array<std::size_t, 3> kPairRep = {0, 1, 2};

// Exponent vectors over X1..X7 of y1, y2, y3, z1, z2.
const std::array<std::array<int, 7>, 5> kGenerators = {{
    {1, 0, 0, 0, 0, 0, 1},  // y1 = X1 X7
    {0, 1, 0, 0, 0, 1, 0},  // y2 = X2 X6
    {0, 0, 1, 0, 1, 0, 0},  // y3 = X3 X5
    {1, 0, 0, 0, 1, 1, 0},  // z1 = X1 X5 X6
    {0, 1, 1, 0, 0, 0, 1},  // z2 = X2 X3 X7
}};

Weight apply(const Lattice2& a, const Weight& w) {
  return {a[0][0] * w[0] + a[0][1] * w[1], a[1][0] * w[0] + a[1][1] * w[1]};
}

Lattice2 multiply(const Lattice2& a, const Lattice2& b) {
  Lattice2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

std::string cycle_notation(const std::array<std::size_t, 3>& p) {
  std::string out;
  std::array<bool, 3> seen{};
  for (std::size_t s = 0; s < 3; ++s) {
    if (seen[s] || p[s] == s) continue;
    out += "(";
    for (std::size_t i = s; !seen[i]; i = p[i]) {
      seen[i] = true;
      out += std::to_string(i + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

InducedAction induce(const std::array<std::size_t, 7>& sigma) {
  IntMatrix g(7, 5, Integer(0));
  for (std::size_t j = 0; j < 5; ++j)
    for (std::size_t i = 0; i < 7; ++i) g(i, j) = kGenerators[j][i];
  InducedAction out{};
  for (std::size_t j = 0; j < 5; ++j) {
    std::array<int, 7> image{};
    for (std::size_t i = 0; i < 7; ++i) image[sigma[i]] = kGenerators[j][i];
    std::vector<Integer> rhs(image.begin(), image.end());
    if (!solve_integer(g, rhs))
      throw StructuralError("image of an invariant generator is not a Laurent monomial in y, z");
    const auto it = std::find(kGenerators.begin(), kGenerators.end(), image);
    if (it == kGenerators.end()) throw StructuralError("image of an invariant generator is not a generator");
    out.perm[j] = static_cast<std::size_t>(it - kGenerators.begin());
  }
  return out;
}

std::string name_of(const std::array<std::size_t, 7>& sigma) {
  std::array<std::size_t, 3> pairs{};
  for (std::size_t p = 0; p < 3; ++p) pairs[p] = static_cast<std::size_t>(kPairOf[sigma[kPairRep[p]]]);
  return "s3:" + cycle_notation(pairs) + ",s2:" + (induce(sigma).swaps_z() ? "-" : "+");
}

}  // namespace

IntMatrix WeightTable::chart_matrix() const {
  IntMatrix m(2, 6, Integer(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    if (i == kMiddle) continue;
    m(0, col) = weights[i][0];
    m(1, col) = weights[i][1];
    ++col;
  }
  return m;
}

WeightTable build_weight_table() {
  return WeightTable{{{{1, 0}, {0, 1}, {1, -1}, {0, 0}, {-1, 1}, {0, -1}, {-1, 0}}}};
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < 7; ++i)
    if (sigma[i] != i) return false;
  return true;
}

const WeylElement& WeylGroup::identity() const {
  for (const auto& e : elements_)
    if (e.is_identity()) return e;
  throw StructuralError("Weyl group lacks an identity");
}

WeylElement WeylGroup::compose(const WeylElement& a, const WeylElement& b) const {
  std::array<std::size_t, 7> s{};
  for (std::size_t i = 0; i < 7; ++i) s[i] = a.sigma[b.sigma[i]];
  return find(s);
}

WeylElement WeylGroup::inverse(const WeylElement& a) const {
  std::array<std::size_t, 7> s{};
  for (std::size_t i = 0; i < 7; ++i) s[a.sigma[i]] = i;
  return find(s);
}

const WeylElement& WeylGroup::find(const std::array<std::size_t, 7>& sigma) const {
  for (const auto& e : elements_)
    if (e.sigma == sigma) return e;
  throw StructuralError("permutation is not in the Weyl group");
}

const WeylElement& WeylGroup::by_name(const std::string& name) const {
  for (const auto& e : elements_)
    if (e.name == name) return e;
  throw UsageError("no Weyl element named " + name);
}

std::size_t WeylGroup::element_order(const WeylElement& a) const {
  std::size_t n = 1;
  for (WeylElement p = a; !p.is_identity(); p = compose(p, a)) ++n;
  return n;
}

WeylGroup synthesize_weyl_group() {
  const WeightTable table = build_weight_table();
  const auto& w = table.weights;
  WeylGroup group;
  std::array<std::size_t, 6> movable = {0, 1, 2, 4, 5, 6};
  std::array<std::size_t, 6> images = movable;
  do {
    std::array<std::size_t, 7> sigma{};
    sigma[kMiddle] = kMiddle;
    for (std::size_t k = 0; k < 6; ++k) sigma[movable[k]] = images[k];
    // X1 and X2 carry the standard basis weights, so they fix the matrix.
    const Lattice2 a = {{{w[sigma[0]][0], w[sigma[1]][0]}, {w[sigma[0]][1], w[sigma[1]][1]}}};
    const int det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (det != 1 && det != -1) continue;
    bool consistent = true;
    for (std::size_t i = 0; i < 7 && consistent; ++i) consistent = apply(a, w[i]) == w[sigma[i]];
    if (consistent) group.elements_.push_back(WeylElement{sigma, a, name_of(sigma)});
  } while (std::next_permutation(images.begin(), images.end()));

  Certificate& c = group.cert_;
  c.name = "weyl-synthesis";
  c.input("weights", "X1:(1,0) X2:(0,1) X3:(1,-1) X4:(0,0) X5:(-1,1) X6:(0,-1) X7:(-1,0)");
  c.require(group.order() == 12, "lattice-linear permutations found: " + std::to_string(group.order()));
  if (group.order() != 12) throw StructuralError(c.message);

  bool linear = true;
  for (const auto& e : group.elements_)
    for (std::size_t i = 0; i < 7; ++i) linear = linear && apply(e.lattice, w[i]) == w[e.sigma[i]];
  c.require(linear, "A * w_i = w_sigma(i) for all 7 weights and all 12 elements");

  bool closed = true;
  for (const auto& a : group.elements_)
    for (const auto& b : group.elements_) {
      std::array<std::size_t, 7> s{};
      for (std::size_t i = 0; i < 7; ++i) s[i] = a.sigma[b.sigma[i]];
      const bool member = std::any_of(group.elements_.begin(), group.elements_.end(),
                                      [&](const WeylElement& e) { return e.sigma == s; });
      closed = closed && member && (multiply(a.lattice, b.lattice) == group.find(s).lattice);
    }
  c.require(closed, "closed under composition, lattice matrices multiply compatibly");

  std::set<std::string> names;
  for (const auto& e : group.elements_) names.insert(e.name);
  c.require(names.size() == 12, "canonical names are distinct");

  const std::array<std::size_t, 7> antipodal_sigma = {6, 5, 4, 3, 2, 1, 0};
  const WeylElement& antipodal = group.find(antipodal_sigma);
  const Lattice2 minus_id = {{{-1, 0}, {0, -1}}};
  c.require(antipodal.lattice == minus_id && group.compose(antipodal, antipodal).is_identity(),
            "antipodal element (1 7)(2 6)(3 5) present as " + antipodal.name + ", lattice -I, squares to identity");
  c.require(antipodal.sigma[0] == 6 && antipodal.sigma[4] == 2 && antipodal.sigma[5] == 1,
            "antipodal element exchanges (X1,X5,X6) with (X7,X3,X2)");

  std::vector<std::string> center;
  bool abelian = true;
  for (const auto& a : group.elements_) {
    bool central = true;
    for (const auto& b : group.elements_) central = central && group.compose(a, b) == group.compose(b, a);
    if (central) center.push_back(a.name);
    abelian = abelian && central;
  }
  c.require(!abelian, "nonabelian");
  c.require(center.size() == 2 && std::find(center.begin(), center.end(), antipodal.name) != center.end(),
            "center has order " + std::to_string(center.size()) + " and contains the antipodal element");

  // Dihedral presentation: r of order 6, involution s outside <r>, s r s = r^-1.
  std::string dihedral = "no rotation/reflection pair found";
  bool is_dihedral = false;
  for (const auto& r : group.elements_) {
    if (group.element_order(r) != 6 || is_dihedral) continue;
    std::vector<WeylElement> powers;
    for (WeylElement p = r; powers.size() < 6; p = group.compose(p, r)) powers.push_back(p);
    for (const auto& s : group.elements_) {
      if (group.element_order(s) != 2 || std::find(powers.begin(), powers.end(), s) != powers.end()) continue;
      if (group.compose(group.compose(s, r), s) == group.inverse(r)) {
        is_dihedral = true;
        dihedral = "r = " + r.name + " has order 6, s = " + s.name + " satisfies s r s = r^-1";
        break;
      }
    }
  }
  c.require(is_dihedral, "dihedral of order 12: " + dihedral);

  std::set<std::array<std::size_t, 3>> pair_perms;
  std::size_t kernel = 0;
  for (const auto& e : group.elements_) {
    if (induce(e.sigma).swaps_z()) continue;
    ++kernel;
    std::array<std::size_t, 3> p{};
    for (std::size_t q = 0; q < 3; ++q) p[q] = static_cast<std::size_t>(kPairOf[e.sigma[kPairRep[q]]]);
    pair_perms.insert(p);
  }
  c.require(kernel == 6 && pair_perms.size() == 6,
            "subgroup of order " + std::to_string(kernel) + " induces " + std::to_string(pair_perms.size()) +
                " permutations of the antipodal pairs (all of S3)");

  bool pairs_kept = true;
  for (const auto& e : group.elements_) {
    pairs_kept = pairs_kept && e.sigma[kMiddle] == kMiddle;
    for (std::size_t i = 0; i < 7; ++i)
      if (i != kMiddle) pairs_kept = pairs_kept && kPairOf[e.sigma[6 - i]] == kPairOf[e.sigma[i]];
  }
  c.require(pairs_kept, "every element fixes X4 and preserves the pairing {1,7},{2,6},{3,5}");

  const PolyRing ring = models::quadric_ring();
  const MultiPoly n = models::quadric_equation(ring);
  bool invariant = true;
  for (const auto& e : group.elements_) invariant = invariant && quadric_action(e, ring).apply(n) == n;
  c.require(invariant, "quadric " + n.to_string() + " invariant under all 12 elements");

  if (!c.ok) throw StructuralError("Weyl group certification failed: " + c.message);
  std::sort(group.elements_.begin(), group.elements_.end(),
            [](const WeylElement& a, const WeylElement& b) { return a.name < b.name; });
  return group;
}

MonomialAction quadric_action(const WeylElement& w, const PolyRing& ring) {
  if (ring.nvars() != 7) throw DomainMismatchError("quadric action needs seven coordinates");
  return MonomialAction::permutation(w.name, ring, std::vector<std::size_t>(w.sigma.begin(), w.sigma.end()));
}

MonomialAction chart_action(const WeylElement& w, const PolyRing& chart_ring) {
  if (chart_ring.nvars() != 6) throw DomainMismatchError("chart action needs six coordinates");
  auto chart_index = [](std::size_t i) { return i < kMiddle ? i : i - 1; };
  std::vector<std::size_t> perm(6);
  for (std::size_t i = 0; i < 7; ++i)
    if (i != kMiddle) perm[chart_index(i)] = chart_index(w.sigma[i]);
  return MonomialAction::permutation(w.name, chart_ring, std::move(perm));
}

InducedAction induced_action_on_model(const WeylElement& w) { return induce(w.sigma); }

MonomialAction model_action(const WeylElement& w, const VarietyDescriptor& model) {
  const InducedAction a = induced_action_on_model(w);
  return models::model_action(model, a.y_perm(), a.swaps_z(), w.name);
}

Certificate certify_induced_action(const WeylGroup& group) {
  Certificate c("induced-action");
  std::set<std::array<std::size_t, 5>> image;
  bool blocks = true;
  for (const auto& e : group.elements()) {
    const InducedAction a = induced_action_on_model(e);
    image.insert(a.perm);
    for (std::size_t j = 0; j < 3; ++j) blocks = blocks && a.perm[j] < 3;
  }
  c.require(blocks, "every induced permutation preserves {y1,y2,y3} and {z1,z2}");
  c.require(image.size() == 12, "induced permutation group has order " + std::to_string(image.size()) +
                                    " inside S3 x S2 (order 12)");

  bool hom = true;
  for (const auto& s : group.elements())
    for (const auto& t : group.elements()) {
      const InducedAction st = induced_action_on_model(group.compose(s, t));
      const InducedAction is = induced_action_on_model(s), it = induced_action_on_model(t);
      for (std::size_t j = 0; j < 5; ++j) hom = hom && st.perm[j] == is.perm[it.perm[j]];
    }
  c.require(hom, "induced(s o t) = induced(s) o induced(t) for all 144 pairs");

  std::set<std::array<std::size_t, 3>> kernel_perms;
  bool kernel_fixes_z = true;
  for (const auto& e : group.elements()) {
    const InducedAction a = induced_action_on_model(e);
    if (a.swaps_z()) continue;
    kernel_perms.insert(a.y_perm());
    kernel_fixes_z = kernel_fixes_z && a.perm[3] == 3 && a.perm[4] == 4;
  }
  c.require(kernel_perms.size() == 6 && kernel_fixes_z,
            "kernel of the z-swap acts as S3 on (y1,y2,y3) fixing z1 and z2");

  const InducedAction anti = induced_action_on_model(group.find({6, 5, 4, 3, 2, 1, 0}));
  c.require(anti.perm == std::array<std::size_t, 5>{0, 1, 2, 4, 3},
            "antipodal element fixes y1, y2, y3 and swaps z1, z2 (x1*x5*x6 -> x7*x3*x2)");
  return c;
}

}  // namespace g2cert
