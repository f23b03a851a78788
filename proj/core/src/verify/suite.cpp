#include "g2cert/verify/suite.hpp"

#include <chrono>
#include <optional>
#include <random>
#include <set>

#include "g2cert/error.hpp"
#include "g2cert/g2/chevalley.hpp"
#include "g2cert/g2/invariants.hpp"
#include "g2cert/g2/weyl.hpp"
#include "g2cert/geom/models.hpp"
#include "g2cert/quadform/quadform.hpp"

#ifndef G2CERT_VERSION
#define G2CERT_VERSION "unknown"
#endif

namespace g2cert::verify {

/// Shared, lazily built inputs for one suite run. Not thread safe.
class SuiteContext {
 public:
  explicit SuiteContext(VerifyConfig config) : config_(std::move(config)) {}

  const VerifyConfig& config() const { return config_; }

  const WeylGroup& weyl() {
    if (!weyl_) weyl_ = synthesize_weyl_group();
    return *weyl_;
  }
  const ChevalleyAlgebra& algebra() {
    if (!algebra_) algebra_ = build_chevalley_algebra();
    return *algebra_;
  }
  const TwistData& torsor() {
    if (!torsor_) {
      const Field q = Field::rationals();
      torsor_ = TwistData::from_polynomials(UniPoly::from_ints(q, config_.cubic), UniPoly::from_ints(q, config_.quadratic));
    }
    return *torsor_;
  }
  const QuadraticForm& twisted() {
    if (!twisted_) twisted_ = twist_form(torsor());
    return *twisted_;
  }
  const Degree3Point& cycle_point() {
    if (!point_) point_ = degree3_point(torsor());
    return *point_;
  }
  const DescentResult& descent() {
    if (!descent_) descent_ = springer_descend(twisted(), cycle_point().point);
    return *descent_;
  }

 private:
  VerifyConfig config_;
  std::optional<WeylGroup> weyl_;
  std::optional<ChevalleyAlgebra> algebra_;
  std::optional<TwistData> torsor_;
  std::optional<QuadraticForm> twisted_;
  std::optional<Degree3Point> point_;
  std::optional<DescentResult> descent_;
};

namespace {

using models::lambda1;
using models::lambda2;
using models::lambda3;
using models::lambda4;

Scalar random_scalar(std::mt19937_64& rng, const Field& k) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  if (k.kind() == FieldKind::prime) return k.from_int(num(rng));
  return k.from_rational(Rational(Integer(num(rng)), Integer(den(rng))));
}

std::vector<ActionPair> weyl_pairs(SuiteContext& ctx, const RationalMapDescriptor& phi) {
  std::vector<ActionPair> pairs;
  for (const auto& w : ctx.weyl().elements())
    pairs.push_back({model_action(w, phi.source()), model_action(w, phi.target())});
  return pairs;
}

Certificate link_well_defined(const RationalMapDescriptor& phi, const RationalMapDescriptor& psi) {
  Certificate c("well-defined");
  c.absorb(check_well_defined(phi));
  c.absorb(check_well_defined(psi));
  return c;
}

Certificate link_equivariant(SuiteContext& ctx, const RationalMapDescriptor& phi, const RationalMapDescriptor& psi) {
  Certificate c("equivariant");
  c.absorb(check_equivariant(phi, weyl_pairs(ctx, phi)));
  c.absorb(check_equivariant(psi, weyl_pairs(ctx, psi)));
  return c;
}

std::vector<std::vector<long>> integer_table(const QuadraticForm& q) {
  std::vector<std::vector<long>> t(q.dimension(), std::vector<long>(q.dimension(), 0));
  for (std::size_t i = 0; i < q.dimension(); ++i)
    for (std::size_t j = i; j < q.dimension(); ++j) {
      const Rational a = q.coeff(i, j).to_rational();
      if (!a.is_integer()) throw PreconditionError("oracle needs integer coefficients");
      t[i][j] = a.num().get_si();
    }
  return t;
}

// Branch (ii) of descent, confirmed by exhaustive small-height search.
Certificate descent_with_oracle(const std::string& name, const QuadraticForm& q, const QuadricPoint& p) {
  Certificate c(name);
  const DescentResult r = springer_descend(q, p);
  c.absorb(r.certificate);
  c.require(r.branch == "cofactor-root", "descent used branch " + r.branch + " (cofactor root expected)");
  std::vector<long> out;
  long height = 1;
  for (const auto& s : r.point.coordinates) {
    out.push_back(s.to_rational().num().get_si());
    height = std::max(height, std::abs(out.back()));
  }
  const auto iso = small_isotropic_vectors(integer_table(q), height);
  c.require(std::find(iso.begin(), iso.end(), out) != iso.end(),
            "exhaustive search of height <= " + std::to_string(height) + " finds " + std::to_string(iso.size()) +
                " isotropic vectors, including the descended point");
  return c;
}

std::vector<CheckDescriptor> build_registry() {
  std::vector<CheckDescriptor> r;
  auto add = [&](std::string id, std::string anchor, std::string title, std::function<Certificate(SuiteContext&)> f,
                 CheckKind kind = CheckKind::check) {
    r.push_back({std::move(id), std::move(anchor), std::move(title), kind, std::move(f)});
  };
  auto negative = [&](std::string id, std::string anchor, std::string title,
                      std::function<Certificate(SuiteContext&)> f) {
    add(std::move(id), std::move(anchor), std::move(title), std::move(f), CheckKind::negative_control);
  };
  auto out_of_scope = [&](std::string id, std::string anchor, std::string title) {
    add(std::move(id), std::move(anchor), std::move(title), nullptr, CheckKind::out_of_scope);
  };

  // Torus, quadric, Weyl group.
  add("torus.weights", "setup/torus", "Weights of X1..X7 and torus invariance of the quadric", [](SuiteContext&) {
    const WeightTable t = build_weight_table();
    Certificate c("torus-weights");
    std::string listing;
    for (std::size_t i = 1; i <= 7; ++i)
      listing += (i > 1 ? " " : "") + ("X" + std::to_string(i)) + ":(" + std::to_string(t.of(i)[0]) + "," +
                 std::to_string(t.of(i)[1]) + ")";
    c.witness(listing);
    c.require(t.of(4) == Weight{0, 0}, "X4 has weight 0");
    bool antipodal = true;
    for (std::size_t i = 1; i <= 3; ++i)
      antipodal = antipodal && t.of(i)[0] == -t.of(8 - i)[0] && t.of(i)[1] == -t.of(8 - i)[1];
    c.require(antipodal, "w7 = -w1, w6 = -w2, w5 = -w3");
    c.require(t.of(3)[0] == t.of(1)[0] - t.of(2)[0] && t.of(3)[1] == t.of(1)[1] - t.of(2)[1], "w3 = w1 - w2");
    const PolyRing ring = models::quadric_ring();
    const MultiPoly n = models::quadric_equation(ring);
    bool zero = true;
    for (const auto& [m, coeff] : n.terms()) {
      int a = 0, b = 0;
      for (std::size_t i = 0; i < 7; ++i) {
        a += m[i] * t.of(i + 1)[0];
        b += m[i] * t.of(i + 1)[1];
      }
      zero = zero && a == 0 && b == 0;
    }
    c.require(zero, "every monomial of " + n.to_string() + " has weight 0");
    return c;
  });
  add("weyl.synthesis", "setup/weyl-action",
      "Lattice-linear permutations form a dihedral group of order 12 preserving the quadric",
      [](SuiteContext& ctx) { return ctx.weyl().certificate(); });
  add("weyl.induced-action", "w-model/weyl-action",
      "Induced action on (y1, y2, y3, z1, z2) is S3 x S2 and a homomorphism",
      [](SuiteContext& ctx) { return certify_induced_action(ctx.weyl()); });
  add("weyl.elements", "setup/weyl-action", "Canonical names of the 12 elements", [](SuiteContext& ctx) {
    Certificate c("weyl-elements");
    std::set<std::string> names;
    for (const auto& e : ctx.weyl().elements()) {
      names.insert(e.name);
      c.witness(e.name + " = [" + std::to_string(e.lattice[0][0]) + " " + std::to_string(e.lattice[0][1]) + "; " +
                std::to_string(e.lattice[1][0]) + " " + std::to_string(e.lattice[1][1]) + "]");
    }
    c.require(names.size() == 12, "12 distinct names");
    return c;
  });

  // Reduction to the Cartan subalgebra.
  add("chevalley.structure", "reduction/differential",
      "Chevalley basis of type G2: roots, integer structure constants, Jacobi identity",
      [](SuiteContext& ctx) { return ctx.algebra().certificate(); });
  add("prop1.generic.Q", "reduction/differential", "Differential checks for the generic element over Q(a,b)",
      [](SuiteContext& ctx) { return prop1_generic_check(ctx.algebra(), Field::rationals()); });
  add("prop1.concrete.Q", "reduction/differential", "Differential checks for x = (1,1) over Q", [](SuiteContext& ctx) {
    const Field q = Field::rationals();
    return prop1_differential_check(ctx.algebra(), {q.one(), q.one()});
  });
  add("prop1.char-p", "reduction/differential",
      "Per characteristic: a regular F_p-point if one exists, else exhaustive absence plus the generic check over "
      "F_p(a,b)",
      [](SuiteContext& ctx) {
        Certificate c("prop1-char-p");
        for (auto p : ctx.config().prop1_primes) {
          const Field k = Field::prime(p);
          std::optional<CartanElement> x;
          const Certificate search = regular_element_search(k, &x);
          if (x) {
            c.witness(k.name() + ": regular element (" + x->a.to_string() + ", " + x->b.to_string() + ")");
            Certificate leg = prop1_differential_check(ctx.algebra(), *x);
            leg.name = k.name();
            c.absorb(leg);
          } else {
            c.witness(k.name() + ": " + search.message);
            Certificate leg = prop1_generic_check(ctx.algebra(), k);
            leg.name = k.name() + "(a,b)";
            c.absorb(leg);
          }
        }
        return c;
      });
  negative("prop1.negative.non-regular", "reduction/differential",
           "x = (1,1) over GF(5) must be rejected as non-regular", [](SuiteContext& ctx) {
             const Field k = Field::prime(5);
             return prop1_differential_check(ctx.algebra(), {k.one(), k.one()});
           });
  add("freeness.snf", "reduction/generic-freeness", "Smith form of the chart weight matrix",
      [](SuiteContext&) { return generic_freeness_certificate(); });
  negative("freeness.negative.doubled", "reduction/generic-freeness",
           "Doubled weights leave a mu_2 stabilizer", [](SuiteContext&) {
             IntMatrix m = build_weight_table().chart_matrix();
             for (std::size_t i = 0; i < m.rows(); ++i)
               for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= 2;
             return generic_freeness_certificate(m);
           });
  add("invariants.cartan", "reduction/cartan-invariants",
      "Reynolds invariants of degrees 2 and 6 on the Cartan subalgebra",
      [](SuiteContext& ctx) { return weyl_invariants_on_cartan(ctx.weyl()).certificate; });
  out_of_scope("reduction.function-field-identity", "reduction/function-field",
               "Equality of function fields: only its differential and dimension ingredients are certified");
  out_of_scope("reduction.generic-fiber-orbit", "reduction/generic-fiber",
               "Generic fiber is one W-orbit: needs conjugacy of semisimple elements, not mechanized");
  out_of_scope("reduction.special-parabolic", "reduction/special-parabolic",
               "Speciality of the parabolic subgroup: Galois cohomology, no computable content");
  out_of_scope("reduction.parabolic-smoothness", "setup/parabolic",
               "Smoothness of the parabolic subgroup: outside the computational scope");

  // W-models.
  add("quotient.generators", "w-model/chart-quotient",
      "Invariant generators, index-1 lattice, relations and recovery identities on the chart",
      [](SuiteContext&) { return quotient_generators_check(models::quotient_data()); });
  add("quotient.equivariant", "w-model/chart-quotient", "The quotient map commutes with all 12 Weyl elements",
      [](SuiteContext& ctx) {
        const auto phi = models::quotient_map();
        std::vector<ActionPair> pairs;
        for (const auto& w : ctx.weyl().elements())
          pairs.push_back({chart_action(w, phi.source().ring()), model_action(w, phi.target())});
        return check_equivariant(phi, pairs);
      });
  negative("quotient.negative.merged-generator", "w-model/chart-quotient",
           "Replacing z1, z2 by z1*z2 gives an infinite-index lattice", [](SuiteContext&) {
             QuotientData q = models::quotient_data();
             const PolyRing& ring = q.chart.ring();
             q.invariant_names = {"y1", "y2", "y3", "w"};
             q.invariants = {RationalFunction(ring.parse("x1*x7")), RationalFunction(ring.parse("x2*x6")),
                             RationalFunction(ring.parse("x3*x5")),
                             RationalFunction(ring.parse("x1*x2*x3*x5*x6*x7"))};
             q.relations.clear();
             q.recoveries.clear();
             return quotient_generators_check(q);
           });
  negative("quotient.negative.non-invariant", "w-model/chart-quotient",
           "Adding x1 as a generator breaks torus invariance", [](SuiteContext&) {
             QuotientData q = models::quotient_data();
             q.invariant_names.push_back("x1");
             q.invariants.push_back(RationalFunction(q.chart.ring().parse("x1")));
             return quotient_generators_check(q);
           });

  struct Link {
    std::string name;
    std::function<RationalMapDescriptor()> forward, backward;
    std::string title;
  };
  const std::vector<Link> links = {
      {"closure", models::lambda1_to_lambda2, models::lambda2_to_lambda1, "Lambda1 <-> Lambda2 (projective closure)"},
      {"eliminate-z0", models::lambda2_to_lambda3, models::lambda3_to_lambda2,
       "Lambda2 <-> Lambda3 (eliminating Z0)"},
      {"cremona", models::cremona_3_to_4, models::cremona_4_to_3, "Lambda3 <-> Lambda4 (Cremona transformation)"},
  };
  for (const auto& link : links) {
    add("lambda-chain." + link.name + ".well-defined", "w-model/lambda-chain", link.title + ": both maps well defined",
        [link](SuiteContext&) { return link_well_defined(link.forward(), link.backward()); });
    add("lambda-chain." + link.name + ".birational", "w-model/lambda-chain",
        link.title + ": both composites are the identity",
        [link](SuiteContext&) { return check_birational_pair(link.forward(), link.backward()); });
    add("lambda-chain." + link.name + ".equivariant", "w-model/lambda-chain",
        link.title + ": both maps commute with all 12 Weyl elements",
        [link](SuiteContext& ctx) { return link_equivariant(ctx, link.forward(), link.backward()); });
  }
  add("lambda-chain.cremona.involution", "w-model/lambda-chain",
      "Cremona followed by Cremona is the identity modulo the Lambda3 ideal", [](SuiteContext&) {
        const auto twice = compose(models::cremona_3_to_4(), models::cremona_4_to_3());
        Certificate c = check_maps_agree(lambda3(), AmbientKind::projective, twice.coordinates(),
                                         identity_assignment(lambda3().ring()), "cremona-involution");
        c.witness("composite: " + twice.describe());
        return c;
      });
  negative("lambda-chain.negative.collapse", "w-model/lambda-chain", "The zero map Lambda1 -> Lambda1 is not defined",
           [](SuiteContext&) {
             const auto l1 = lambda1();
             return check_well_defined(
                 RationalMapDescriptor("collapse", l1, l1, std::vector<MultiPoly>(5, l1.ring().zero())));
           });
  negative("lambda-chain.negative.forget-z0", "w-model/lambda-chain",
           "Dropping Z0 from Lambda2 into P4 with a section back is not a birational pair", [](SuiteContext&) {
             const auto l2 = lambda2();
             const PolyRing p4(Field::rationals(), {"Y1", "Y2", "Y3", "Z1", "Z2"});
             const VarietyDescriptor ambient("P4", AmbientKind::projective, p4, {});
             const PolyRing& ring = l2.ring();
             const RationalMapDescriptor forget(
                 "forget-Z0", l2, ambient,
                 std::vector<MultiPoly>{ring.var("Y1"), ring.var("Y2"), ring.var("Y3"), ring.var("Z1"), ring.var("Z2")});
             const RationalMapDescriptor back("restore", ambient, l2,
                                              std::vector<MultiPoly>{p4.var("Y1"), p4.var("Y2"), p4.var("Y3"),
                                                                     p4.parse("-Y1 - Y2 - Y3"), p4.var("Z1"),
                                                                     p4.var("Z2")});
             return check_birational_pair(forget, back);
           });
  negative("lambda-chain.negative.mismatched-action", "w-model/lambda-chain",
           "Pairing a 3-cycle with its inverse breaks equivariance", [](SuiteContext&) {
             const auto phi = models::lambda1_to_lambda2();
             const auto cycle = models::model_action(phi.source(), {1, 2, 0}, false, "(123)");
             const auto inverse = models::model_action(phi.target(), {2, 0, 1}, false, "(132)");
             return check_equivariant(phi, {{cycle, inverse}});
           });

  add("smoothness.lambda4.Q", "w-model/smoothness", "Lambda4 is smooth over Q",
      [](SuiteContext&) { return is_smooth_quadric(lambda4_form()); });
  add("smoothness.lambda4.char-p", "w-model/smoothness",
      "Lambda4 is smooth over each configured prime field, by the radical in characteristic 2",
      [](SuiteContext& ctx) {
        Certificate c("smoothness-char-p");
        for (auto p : ctx.config().smooth_primes) {
          Certificate leg = is_smooth_quadric(lambda4_form(Field::prime(p)));
          leg.name = "GF(" + std::to_string(p) + ")";
          c.absorb(leg);
        }
        return c;
      });
  negative("smoothness.negative.singular", "w-model/smoothness", "X1*X2 in three variables over GF(2) is singular",
           [](SuiteContext&) {
             const PolyRing ring(Field::prime(2), {"X1", "X2", "X3"});
             return is_smooth_quadric(QuadraticForm::from_polynomial(ring.parse("X1*X2")));
           });

  add("twist.split-form", "w-model/twisting", "The split torsor reproduces Lambda4 exactly", [](SuiteContext&) {
    Certificate c("split-twist");
    const QuadraticForm q = twist_form(TwistData::split());
    c.require(q == lambda4_form(), "twist of the split torsor: " + q.to_string({"Y1", "Y2", "Y3", "Z1", "Z2"}));
    return c;
  });
  add("twist.congruence", "w-model/twisting",
      "The trace-form model becomes Lambda4 over the splitting algebra of the torsor", [](SuiteContext& ctx) {
        Certificate c = twist_congruence_certificate(ctx.torsor());
        c.witness("q_zeta = " + ctx.twisted().to_string({"a", "b", "c", "u", "v"}));
        return c;
      });
  add("twist.smoothness", "w-model/smoothness", "The twisted quadric is smooth over Q",
      [](SuiteContext& ctx) { return is_smooth_quadric(ctx.twisted()); });
  add("twist.degree3-point", "w-model/zero-cycle", "Idempotent point of the degree-3 cycle on the twisted quadric",
      [](SuiteContext& ctx) {
        Certificate c = ctx.cycle_point().certificate;
        c.witness("point " + ctx.cycle_point().point.to_string());
        return c;
      });
  add("twist.descent", "w-model/springer", "Effective descent of the degree-3 point to a rational point",
      [](SuiteContext& ctx) { return ctx.descent().certificate; });
  add("twist.rationality", "w-model/rationality",
      "Projection from the descended point is a birational map to P3", [](SuiteContext& ctx) {
        const auto& p = ctx.descent().point.coordinates;
        return stereographic_param(ctx.twisted(), p, {"a", "b", "c", "u", "v"}).certificate;
      });
  add("twist.branch-ii.planted", "w-model/springer",
      "Planted cubic point on <1,1,-1,-1,5> descends through the cofactor root", [](SuiteContext&) {
        const Field q = Field::rationals();
        QuadraticForm form(q, 5);
        const long diag[5] = {1, 1, -1, -1, 5};
        for (std::size_t i = 0; i < 5; ++i) form.set(i, i, q.from_int(diag[i]));
        const Field k = Field::number_field({-2, 0, 0, 1}, "theta");
        const Scalar t = k.generator();
        const QuadricPoint p{k, {k.from_int(2) * t * t, t - k.from_int(2), k.zero(), t + k.from_int(2), k.zero()}};
        return descent_with_oracle("planted-descent", form, p);
      });
  add("twist.branch-ii.torsor", "w-model/springer",
      "Torsor (x^3 - x - 1, x^2 - 5): idempotent point descends through the cofactor root", [](SuiteContext&) {
        const Field q = Field::rationals();
        const TwistData z =
            TwistData::from_polynomials(UniPoly::from_ints(q, {-1, -1, 0, 1}), UniPoly::from_ints(q, {-5, 0, 1}));
        return descent_with_oracle("torsor-descent", twist_form(z), degree3_point(z).point);
      });
  negative("twist.negative.off-quadric", "w-model/springer", "Descent refuses a point that is not on the quadric",
           [](SuiteContext& ctx) {
             const Field& k = ctx.cycle_point().point.field;
             QuadricPoint p = ctx.cycle_point().point;
             p.coordinates[3] = k.one();
             return springer_descend(ctx.twisted(), p).certificate;
           });
  add("stereographic.circle", "w-model/rationality", "Projection of the circle from (1:0:1)", [](SuiteContext&) {
    const PolyRing ring(Field::rationals(), {"X", "Y", "Z"});
    const Field& q = ring.field();
    const auto p = stereographic_param(QuadraticForm::from_polynomial(ring.parse("X^2 + Y^2 - Z^2")),
                                       {q.one(), q.zero(), q.one()}, {"X", "Y", "Z"});
    Certificate c = p.certificate;
    c.witness("parametrization " + p.forward.describe());
    return c;
  });
  add("stereographic.lambda4", "w-model/rationality", "Projection of Lambda4 from (1:0:0:0:0)", [](SuiteContext&) {
    const Field q = Field::rationals();
    return stereographic_param(lambda4_form(), {q.one(), q.zero(), q.zero(), q.zero(), q.zero()},
                               {"Y1", "Y2", "Y3", "Z1", "Z2"})
        .certificate;
  });
  out_of_scope("twist.hilbert90-identification", "w-model/twisting",
               "Identification of the trace-form model with the abstract twist; its splitting congruence is "
               "certified instead");

  // Randomized self-checks driven by the seed.
  add("plumbing.adjoint-homomorphism", "plumbing", "ad([x,y]) = [ad x, ad y] on random pairs over Q",
      [](SuiteContext& ctx) {
        std::mt19937_64 rng(ctx.config().seed);
        const Field q = Field::rationals();
        const auto& g = ctx.algebra();
        Certificate c("adjoint-homomorphism");
        bool ok = true;
        const int trials = 6;
        for (int t = 0; t < trials; ++t) {
          std::vector<Scalar> x, y, xy(ChevalleyAlgebra::kDim, q.zero());
          for (std::size_t i = 0; i < ChevalleyAlgebra::kDim; ++i) {
            x.push_back(random_scalar(rng, q));
            y.push_back(random_scalar(rng, q));
          }
          for (std::size_t i = 0; i < ChevalleyAlgebra::kDim; ++i)
            for (std::size_t j = 0; j < ChevalleyAlgebra::kDim; ++j)
              for (std::size_t k = 0; k < ChevalleyAlgebra::kDim; ++k)
                if (g.c(i, j, k)) xy[k] += x[i] * y[j] * q.from_int(g.c(i, j, k));
          const auto ax = adjoint_matrix(g, x), ay = adjoint_matrix(g, y);
          ok = ok && adjoint_matrix(g, xy) == ax * ay - ay * ax;
        }
        c.require(ok, std::to_string(trials) + " random pairs (seed " + std::to_string(ctx.config().seed) + ")");
        return c;
      });
  add("plumbing.polarization", "plumbing", "q(x+y) - q(x) - q(y) = x B y on random forms in several characteristics",
      [](SuiteContext& ctx) {
        std::mt19937_64 rng(ctx.config().seed + 1);
        Certificate c("polarization");
        for (const Field& k : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
          bool ok = true;
          for (int t = 0; t < 10; ++t) {
            QuadraticForm q(k, 5);
            for (std::size_t i = 0; i < 5; ++i)
              for (std::size_t j = i; j < 5; ++j) q.set(i, j, random_scalar(rng, k));
            std::vector<Scalar> x, y, s;
            for (int i = 0; i < 5; ++i) {
              x.push_back(random_scalar(rng, k));
              y.push_back(random_scalar(rng, k));
              s.push_back(x.back() + y.back());
            }
            const ScalarMatrix b = bilinearize(q);
            Scalar bxy = k.zero();
            for (std::size_t i = 0; i < 5; ++i)
              for (std::size_t j = 0; j < 5; ++j) bxy += x[i] * b(i, j) * y[j];
            ok = ok && q.eval(s) - q.eval(x) - q.eval(y) == bxy;
          }
          c.require(ok, "10 random forms and vectors over " + k.name());
        }
        return c;
      });
  add("plumbing.ideal-membership", "plumbing", "Random combinations of the Lambda2 equations reduce to zero",
      [](SuiteContext& ctx) {
        std::mt19937_64 rng(ctx.config().seed + 2);
        const auto l2 = lambda2();
        const PolyRing& ring = l2.ring();
        Certificate c("ideal-membership");
        bool ok = true;
        std::uniform_int_distribution<std::size_t> var(0, ring.nvars() - 1);
        std::uniform_int_distribution<int> exp(0, 2);
        for (int t = 0; t < 8; ++t) {
          MultiPoly f = ring.zero();
          for (const auto& g : l2.ideal().generators()) {
            MultiPoly m = ring.constant(random_scalar(rng, ring.field()));
            for (int k = 0; k < 2; ++k) m = m * ring.var(var(rng)).pow(static_cast<unsigned>(exp(rng)));
            f = f + m * g;
          }
          ok = ok && l2.ideal().contains(f);
        }
        c.require(ok, "8 random combinations (seed " + std::to_string(ctx.config().seed) + ")");
        return c;
      });
  return r;
}

}  // namespace

const std::vector<CheckDescriptor>& registry() {
  static const std::vector<CheckDescriptor> r = [] {
    auto built = build_registry();
    std::set<std::string> ids;
    for (const auto& c : built)
      if (!ids.insert(c.id).second) throw StructuralError("duplicate check id " + c.id);
    return built;
  }();
  return r;
}

namespace {

bool glob(const char* p, const char* s) {
  if (*p == '\0') return *s == '\0';
  if (*p == '*') return glob(p + 1, s) || (*s != '\0' && glob(p, s + 1));
  if (*s == '\0') return false;
  return (*p == '?' || *p == *s) && glob(p + 1, s + 1);
}

}  // namespace

bool matches(const std::string& id, const std::vector<std::string>& patterns) {
  return std::any_of(patterns.begin(), patterns.end(), [&](const std::string& p) { return glob(p.c_str(), id.c_str()); });
}

VerificationReport run_suite(const std::vector<std::string>& patterns, const VerifyConfig& config) {
  config.validate();
  VerificationReport report;
  report.version = G2CERT_VERSION;
  report.config = config;
  report.selection = patterns;
  SuiteContext ctx(config);
  for (const auto& d : registry()) {
    if (!matches(d.id, patterns)) continue;
    CheckResult res{d.id, d.anchor, d.title, d.kind, CheckStatus::pass, {}, 0.0};
    if (d.kind == CheckKind::out_of_scope) {
      res.status = CheckStatus::skipped;
      res.witness.push_back("out of scope: not mechanized");
      report.results.push_back(std::move(res));
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    std::optional<Certificate> cert;
    std::string error;
    try {
      cert = d.producer(ctx);
    } catch (const Error& e) {
      error = e.what();
    } catch (const std::exception& e) {
      error = std::string("unexpected: ") + e.what();
    }
    const auto end = std::chrono::steady_clock::now();
    res.ms = std::round(std::chrono::duration<double, std::milli>(end - start).count() * 1000.0) / 1000.0;
    if (cert) {
      for (const auto& [key, value] : cert->inputs) res.witness.push_back("input " + key + ": " + value);
      res.witness.insert(res.witness.end(), cert->witnesses.begin(), cert->witnesses.end());
    }
    if (d.kind == CheckKind::negative_control) {
      if (!error.empty()) {
        res.witness.push_back("expected failure (raised): " + error);
      } else if (!cert->ok) {
        res.witness.push_back("expected failure: " + cert->message);
      } else {
        res.status = CheckStatus::fail;
        res.witness.push_back("negative control unexpectedly passed");
      }
    } else if (!error.empty()) {
      res.status = CheckStatus::error;
      res.witness.push_back("error: " + error);
    } else if (!cert->ok) {
      res.status = CheckStatus::fail;
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

std::vector<std::string> group_patterns(const std::string& group) {
  if (group == "all") return {"*"};
  if (group == "weyl") return {"torus.*", "weyl.*"};
  if (group == "lambda-chain") return {"lambda-chain.*"};
  if (group == "prop1") return {"chevalley.*", "prop1.*"};
  if (group == "freeness") return {"freeness.*"};
  if (group == "twist") return {"twist.*", "stereographic.*"};
  if (group == "quotient") return {"quotient.*"};
  if (group == "smoothness") return {"smoothness.*", "twist.smoothness"};
  if (group == "invariants") return {"invariants.*"};
  throw UsageError("unknown check group '" + group + "'");
}

std::vector<std::vector<long>> small_isotropic_vectors(const std::vector<std::vector<long>>& upper, long height) {
  const std::size_t n = upper.size();
  std::vector<std::vector<long>> found;
  std::vector<long> x(n, -height);
  while (true) {
    bool nonzero = false;
    long value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      nonzero = nonzero || x[i] != 0;
      for (std::size_t j = i; j < n; ++j) value += upper[i][j] * x[i] * x[j];
    }
    if (nonzero && value == 0) found.push_back(x);
    std::size_t k = 0;
    while (k < n && x[k] == height) x[k++] = -height;
    if (k == n) break;
    ++x[k];
  }
  return found;
}

}  // namespace g2cert::verify
