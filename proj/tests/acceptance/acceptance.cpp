// End-to-end acceptance gate. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails. Where it is cheap, a criterion is
// confirmed by a test-side computation that does not go through the
// library's own certificate for the same fact.

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "g2cert/arith/smith.hpp"
#include "g2cert/error.hpp"
#include "g2cert/g2/chevalley.hpp"
#include "g2cert/g2/invariants.hpp"
#include "g2cert/g2/weyl.hpp"
#include "g2cert/geom/models.hpp"
#include "g2cert/quadform/quadform.hpp"
#include "g2cert/verify/suite.hpp"

using namespace g2cert;
using namespace g2cert::verify;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("missing: " + what);
    }
  }
};

// The full default run, shared by several criteria.
const VerificationReport& full_run() {
  static const VerificationReport r = run_suite({"*"}, VerifyConfig{});
  return r;
}

const CheckResult* find_result(const std::string& id) {
  for (const auto& c : full_run().results)
    if (c.id == id) return &c;
  return nullptr;
}

void expect_checks(Outcome& o, const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    const CheckResult* c = find_result(id);
    o.expect(c != nullptr, "suite entry " + id);
    if (c) o.expect(c->status == CheckStatus::pass, id + " passes (got " + to_string(c->status) + ")");
  }
}

bool witness_contains(const std::string& id, const std::string& needle) {
  const CheckResult* c = find_result(id);
  if (!c) return false;
  return std::any_of(c->witness.begin(), c->witness.end(),
                     [&](const std::string& w) { return w.find(needle) != std::string::npos; });
}

long mod(long a, long p) { return ((a % p) + p) % p; }

// Determinant of a small integer matrix by cofactor expansion.
long small_det(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * m[0][c] * small_det(minor);
  }
  return d;
}

std::vector<std::vector<long>> upper_table(const QuadraticForm& q) {
  std::vector<std::vector<long>> t(q.dimension(), std::vector<long>(q.dimension(), 0));
  for (std::size_t i = 0; i < q.dimension(); ++i)
    for (std::size_t j = i; j < q.dimension(); ++j) t[i][j] = q.coeff(i, j).to_rational().num().get_si();
  return t;
}

long eval_table(const std::vector<std::vector<long>>& t, const std::vector<long>& v) {
  long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j) s += t[i][j] * v[i] * v[j];
  return s;
}

// Projective singular points of q over F_p by exhaustive search: q(v) = 0
// and every partial derivative vanishes.
std::size_t singular_points_mod_p(const std::vector<std::vector<long>>& t, long p) {
  const std::size_t n = t.size();
  std::vector<long> v(n, 0);
  std::size_t count = 0;
  while (true) {
    std::size_t i = 0;
    while (i < n && v[i] == p - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
    if (mod(eval_table(t, v), p) != 0) continue;
    bool singular = true;
    for (std::size_t k = 0; k < n && singular; ++k) {
      long g = 0;
      for (std::size_t j = 0; j < n; ++j) g += (j == k ? 2 * t[k][k] : (j > k ? t[k][j] : t[j][k])) * v[j];
      singular = mod(g, p) == 0;
    }
    count += singular;
  }
  return count;
}

// ---------------------------------------------------------------------------

Outcome weyl_criterion() {
  Outcome o;
  expect_checks(o, {"torus.weights", "weyl.synthesis", "weyl.induced-action", "weyl.elements"});
  const WeylGroup w = synthesize_weyl_group();
  o.expect(w.order() == 12, "order 12");
  std::size_t central = 0;
  bool abelian = true;
  for (const auto& a : w.elements()) {
    bool commutes_all = true;
    for (const auto& b : w.elements()) {
      const bool commute = w.compose(a, b) == w.compose(b, a);
      commutes_all = commutes_all && commute;
      abelian = abelian && commute;
    }
    central += commutes_all;
  }
  o.expect(!abelian, "nonabelian");
  o.expect(central == 2, "center of order 2");
  // Dihedral of order 12: an element of order 6 and 7 involutions.
  std::size_t involutions = 0, order6 = 0;
  for (const auto& a : w.elements()) {
    involutions += w.element_order(a) == 2;
    order6 += w.element_order(a) == 6;
  }
  o.expect(involutions == 7 && order6 == 2, "element orders of D6");
  // Quadric preserved: sigma (0-based) maps the monomials of
  // X1X7 + X2X6 + X3X5 + X4^2 onto themselves.
  const std::set<std::pair<std::size_t, std::size_t>> quadric_pairs = {{0, 6}, {1, 5}, {2, 4}, {3, 3}};
  for (const auto& a : w.elements()) {
    std::set<std::pair<std::size_t, std::size_t>> image;
    for (auto [i, j] : quadric_pairs) {
      const std::size_t x = a.sigma[i], y = a.sigma[j];
      image.insert({std::min(x, y), std::max(x, y)});
    }
    o.expect(image == quadric_pairs, "quadric preserved by " + a.name);
  }
  // Induced action: all 6 permutations of the y's occur, each with and
  // without the z-swap, and elements fixing the z's act on y's only.
  std::set<std::pair<std::array<std::size_t, 3>, bool>> seen;
  for (const auto& a : w.elements()) {
    const InducedAction ind = induced_action_on_model(a);
    seen.insert({ind.y_perm(), ind.swaps_z()});
    const bool z_fixed_or_swapped = (ind.perm[3] == 3 && ind.perm[4] == 4) || (ind.perm[3] == 4 && ind.perm[4] == 3);
    o.expect(z_fixed_or_swapped, "z's permuted among themselves");
  }
  o.expect(seen.size() == 12, "induced action is S3 x S2");
  o.notes.push_back("order 12, center 2, 7 involutions, induced S3 x S2");
  return o;
}

Outcome quotient_criterion() {
  Outcome o;
  expect_checks(o, {"quotient.generators", "quotient.equivariant"});
  o.expect(witness_contains("quotient.generators", "index 1"), "index-1 witness");
  // Chart weights x1, x2, x3, x5, x6, x7 and the generators' exponents.
  const std::array<std::array<long, 2>, 6> wt = {{{1, 0}, {0, 1}, {1, -1}, {-1, 1}, {0, -1}, {-1, 0}}};
  const std::vector<std::vector<long>> gens = {
      {1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 0}, {1, 0, 0, 1, 1, 0}, {0, 1, 1, 0, 0, 1}};
  for (const auto& g : gens)
    for (int c = 0; c < 2; ++c) {
      long s = 0;
      for (std::size_t i = 0; i < 6; ++i) s += g[i] * wt[i][c];
      o.expect(s == 0, "generator has weight 0");
    }
  // y1, y2, y3, z1 span a rank-4 sublattice of the rank-4 kernel; it is the
  // whole kernel iff its 4x4 minors are coprime.
  long g = 0;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b) {
      std::vector<std::size_t> cols;
      for (std::size_t k = 0; k < 6; ++k)
        if (k != a && k != b) cols.push_back(k);
      std::vector<std::vector<long>> m;
      for (std::size_t r = 0; r < 4; ++r) {
        std::vector<long> row;
        for (auto k : cols) row.push_back(gens[r][k]);
        m.push_back(row);
      }
      g = std::gcd(g, small_det(m));
    }
  o.expect(g == 1, "generator lattice saturated (gcd of minors 1)");
  o.notes.push_back("weights 0, gcd of 4x4 minors " + std::to_string(g));
  return o;
}

Outcome lambda_chain_criterion() {
  Outcome o;
  std::vector<std::string> ids;
  for (const char* link : {"closure", "eliminate-z0", "cremona"})
    for (const char* leg : {"well-defined", "birational", "equivariant"})
      ids.push_back(std::string("lambda-chain.") + link + "." + leg);
  ids.push_back("lambda-chain.cremona.involution");
  expect_checks(o, ids);
  o.notes.push_back(std::to_string(ids.size()) + " link certificates");
  return o;
}

Outcome smoothness_criterion() {
  Outcome o;
  expect_checks(o, {"smoothness.lambda4.Q", "smoothness.lambda4.char-p", "smoothness.negative.singular"});
  o.expect(witness_contains("smoothness.lambda4.char-p", "radical line (1, 1, 1, 0, 0) has q = 1"),
           "char-2 radical line (1,1,1,0,0) with q = 1");
  const auto t = upper_table(lambda4_form());
  std::vector<std::vector<long>> b(5, std::vector<long>(5, 0));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) {
      b[i][j] += t[i][j];
      b[j][i] += t[i][j];
    }
  o.expect(small_det(b) != 0, "nondegenerate over Q");
  for (long p : {2L, 3L, 5L, 7L}) {
    const Certificate c = is_smooth_quadric(lambda4_form(Field::prime(static_cast<std::uint64_t>(p))));
    o.expect(c.ok, "library certifies smooth over F_" + std::to_string(p));
    o.expect(singular_points_mod_p(t, p) == 0, "no singular point over F_" + std::to_string(p));
  }
  // X1*X2 + X3^2 in four variables is singular at (0:0:0:1).
  QuadraticForm bad(Field::rationals(), 4);
  bad.set(0, 1, Field::rationals().one());
  bad.set(2, 2, Field::rationals().one());
  bool refuted = false;
  try {
    refuted = !is_smooth_quadric(bad).ok;
  } catch (const Error&) {
    refuted = true;
  }
  o.expect(refuted, "planted singular quadric rejected");
  o.expect(singular_points_mod_p(upper_table(bad), 3) > 0, "oracle sees the planted singular point");
  o.notes.push_back("det(b) = " + std::to_string(small_det(b)) + ", no singular points over F_2..F_7");
  return o;
}

Outcome prop1_criterion() {
  Outcome o;
  expect_checks(o, {"chevalley.structure", "prop1.generic.Q", "prop1.concrete.Q", "prop1.char-p",
                    "prop1.negative.non-regular"});
  const ChevalleyAlgebra g = build_chevalley_algebra();
  // Jacobi identity recomputed from the raw structure constants.
  const std::size_t n = ChevalleyAlgebra::kDim;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t out = 0; out < n; ++out) {
          long s = 0;
          for (std::size_t m = 0; m < n; ++m)
            s += long{g.c(j, k, m)} * g.c(i, m, out) + long{g.c(k, i, m)} * g.c(j, m, out) +
                 long{g.c(i, j, m)} * g.c(k, m, out);
          if (s != 0) {
            ++failures;
            break;
          }
        }
  o.expect(failures == 0, "Jacobi identity on every triple");
  o.expect(prop1_generic_check(g, Field::rationals()).ok, "generic x over Q(a,b)");
  const Field q = Field::rationals();
  o.expect(prop1_differential_check(g, {q.from_int(1), q.from_int(1)}).ok, "x = (1,1) over Q");
  std::string per_prime;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    const Field fp = Field::prime(p);
    std::optional<CartanElement> x;
    regular_element_search(fp, &x);
    bool ok = false;
    if (x) {
      // Independent regularity check of the element the search returned.
      const Scalar a = x->a, b = x->b;
      const std::vector<Scalar> values = {a, b, a + b, a + a + b, a + a + a + b, a + a + a + b + b};
      ok = std::none_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_zero(); }) &&
           prop1_differential_check(g, *x).ok;
      per_prime += " F_" + std::to_string(p) + ":concrete";
    } else {
      ok = prop1_generic_check(g, fp).ok;
      per_prime += " F_" + std::to_string(p) + ":generic";
    }
    o.expect(ok, "prop1 over F_" + std::to_string(p));
  }
  o.notes.push_back("Jacobi failures 0;" + per_prime);
  return o;
}

Outcome freeness_criterion() {
  Outcome o;
  expect_checks(o, {"freeness.snf", "freeness.negative.doubled"});
  const IntMatrix w = models::chart_weights();
  const SmithForm s = smith_normal_form(w);
  o.expect(s.divisors == std::vector<Integer>{Integer(1), Integer(1)}, "divisors (1,1)");
  IntMatrix doubled = w;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) doubled(i, j) = w(i, j) * Integer(2);
  o.expect(smith_normal_form(doubled).divisors == std::vector<Integer>{Integer(2), Integer(2)}, "divisors (2,2)");
  // Oracle: gcd of the 2x2 minors is d1*d2, gcd of entries is d1.
  long entries = 0, minors = 0;
  for (std::size_t j = 0; j < w.cols(); ++j) {
    entries = std::gcd(entries, w(0, j).get_si());
    entries = std::gcd(entries, w(1, j).get_si());
    for (std::size_t k = j + 1; k < w.cols(); ++k)
      minors = std::gcd(minors, Integer(w(0, j) * w(1, k) - w(0, k) * w(1, j)).get_si());
  }
  o.expect(entries == 1 && minors == 1, "minor gcds (1,1)");
  o.notes.push_back("SNF (1,1); doubled (2,2)");
  return o;
}

Outcome twist_criterion() {
  Outcome o;
  expect_checks(o, {"twist.split-form", "twist.congruence", "twist.smoothness", "twist.degree3-point",
                    "twist.descent", "twist.rationality", "stereographic.circle", "stereographic.lambda4",
                    "twist.branch-ii.planted", "twist.branch-ii.torsor"});
  const Field q = Field::rationals();
  const TwistData zeta =
      TwistData::from_polynomials(UniPoly::from_ints(q, {-2, 0, 0, 1}), UniPoly::from_ints(q, {-5, 0, 1}));
  const QuadraticForm form = twist_form(zeta);
  const Degree3Point d3 = degree3_point(zeta);
  o.expect(form.eval(d3.point.coordinates).is_zero(), "degree-3 point on the twisted quadric");
  const DescentResult r = springer_descend(form, d3.point);
  std::vector<long> pt;
  bool nonzero = false;
  for (const auto& s : r.point.coordinates) {
    const Rational v = s.to_rational();
    o.expect(v.is_integer(), "integral descended point");
    pt.push_back(v.num().get_si());
    nonzero = nonzero || pt.back() != 0;
  }
  o.expect(nonzero && eval_table(upper_table(form), pt) == 0, "descended point isotropic (integer oracle)");
  o.expect(twist_form(TwistData::split()) == lambda4_form(), "split torsor gives Lambda4 exactly");
  // A second torsor taking the cofactor-root branch, checked against
  // exhaustive search of small-height isotropic vectors.
  const TwistData other =
      TwistData::from_polynomials(UniPoly::from_ints(q, {-1, -1, 0, 1}), UniPoly::from_ints(q, {-5, 0, 1}));
  const QuadraticForm f2 = twist_form(other);
  const DescentResult r2 = springer_descend(f2, degree3_point(other).point);
  o.expect(r2.branch == "cofactor-root", "second torsor uses the cofactor-root branch");
  std::vector<long> p2;
  long h = 1;
  for (const auto& s : r2.point.coordinates) {
    p2.push_back(s.to_rational().num().get_si());
    h = std::max(h, std::abs(p2.back()));
  }
  const auto iso = small_isotropic_vectors(upper_table(f2), h);
  o.expect(std::find(iso.begin(), iso.end(), p2) != iso.end(), "oracle finds the branch-(ii) point");
  std::string shown;
  for (auto v : pt) shown += (shown.empty() ? "" : ",") + std::to_string(v);
  o.notes.push_back("default descent branch " + r.branch + " -> (" + shown + "); second torsor cofactor-root");
  return o;
}

Outcome invariants_criterion() {
  Outcome o;
  expect_checks(o, {"invariants.cartan"});
  const WeylGroup w = synthesize_weyl_group();
  const CartanInvariants inv = weyl_invariants_on_cartan(w);
  const int d2 = static_cast<int>(inv.f2.total_degree()), d6 = static_cast<int>(inv.f6.total_degree());
  o.expect(d2 == 2 && d6 == 6, "degrees 2 and 6");
  for (const auto& e : w.elements()) {
    o.expect(act_on_cartan(e, inv.f2) == inv.f2, "f2 fixed by " + e.name);
    o.expect(act_on_cartan(e, inv.f6) == inv.f6, "f6 fixed by " + e.name);
  }
  const MultiPoly jac =
      inv.f2.derivative(0) * inv.f6.derivative(1) - inv.f2.derivative(1) * inv.f6.derivative(0);
  o.expect(!jac.is_zero(), "nonzero Jacobian");
  o.expect(static_cast<std::size_t>(d2 * d6) == w.order(), "2 * 6 = |W|");
  o.notes.push_back("degrees 2, 6; Jacobian " + jac.to_string());
  return o;
}

Outcome negative_controls_criterion() {
  Outcome o;
  std::size_t controls = 0;
  for (const auto& c : full_run().results) {
    if (c.kind != CheckKind::negative_control) continue;
    ++controls;
    o.expect(c.status == CheckStatus::pass, c.id + " failed as asserted");
  }
  o.expect(controls >= 8, "at least 8 registered negative controls");
  o.expect(full_run().overall() == "pass", "overall pass");
  // Flipping any one control must flip the verdict.
  for (std::size_t i = 0; i < full_run().results.size(); ++i) {
    if (full_run().results[i].kind != CheckKind::negative_control) continue;
    VerificationReport r = full_run();
    r.results[i].status = CheckStatus::fail;
    o.expect(r.overall() == "fail", "verdict depends on " + r.results[i].id);
  }
  o.notes.push_back(std::to_string(controls) + " negative controls fail as asserted");
  return o;
}

Outcome determinism_criterion() {
  Outcome o;
  const VerificationReport again = run_suite({"*"}, VerifyConfig{});
  const std::string a = emit_report(full_run().without_timing(), ReportFormat::json);
  const std::string b = emit_report(again.without_timing(), ReportFormat::json);
  o.expect(a == b, "byte-identical JSON modulo timing");
  std::ifstream in(G2CERT_GOLDEN_REPORT, std::ios::binary);
  std::ostringstream golden;
  golden << in.rdbuf();
  o.expect(!golden.str().empty(), "golden report readable");
  o.expect(emit_report(full_run(), ReportFormat::markdown) == golden.str(), "markdown matches golden");
  o.notes.push_back(std::to_string(a.size()) + " JSON bytes, golden markdown matches");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 Weyl synthesis", weyl_criterion},
      {"2 quotient certification", quotient_criterion},
      {"3 Lambda chain", lambda_chain_criterion},
      {"4 smoothness of Lambda4", smoothness_criterion},
      {"5 differential reduction", prop1_criterion},
      {"6 generic freeness", freeness_criterion},
      {"7 twisting and descent", twist_criterion},
      {"8 invariant theory", invariants_criterion},
      {"9 falsifiability", negative_controls_criterion},
      {"10 determinism", determinism_criterion},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::string detail;
    for (const auto& n : o.notes) detail += (detail.empty() ? "" : "; ") + n;
    std::printf("[%s] criterion %s: %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
