#include "g2cert/g2/chevalley.hpp"

#include <algorithm>

#include "g2cert/arith/matrix.hpp"
#include "g2cert/error.hpp"

namespace g2cert {

namespace {

constexpr std::size_t kDim = ChevalleyAlgebra::kDim;
using Vec = std::array<int, kDim>;

std::string positive_name(int c1, int c2) {
  auto part = [](int c, const char* s) -> std::string {
    if (c == 0) return "";
    return (c == 1 ? "" : std::to_string(c)) + s;
  };
  const std::string a = part(c1, "alpha"), b = part(c2, "beta");
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "+" + b;
}

// p + 1 where p is the largest integer with delta - p*gamma a root.
int string_length(const std::vector<Root>& roots, const Root& gamma, const Root& delta) {
  int p = 0;
  auto is_root = [&](const Root& r) { return std::find(roots.begin(), roots.end(), r) != roots.end(); };
  while (is_root({delta.c1 - (p + 1) * gamma.c1, delta.c2 - (p + 1) * gamma.c2})) ++p;
  return p + 1;
}

bool positive(const Root& r) { return r.c1 > 0 || (r.c1 == 0 && r.c2 > 0); }

struct PositivePair {
  Root gamma, delta;
  int value;
};

class Builder {
 public:
  Builder(std::vector<Root> roots, std::vector<PositivePair> pairs) : roots_(std::move(roots)), pairs_(std::move(pairs)) {}

  // N_{gamma,delta} from the positive-pair table and the standard identities.
  int n(const Root& g, const Root& d) const {
    const Root s = g + d;
    if (!is_root(s)) return 0;
    if (positive(g) && positive(d)) {
      for (const auto& p : pairs_) {
        if (p.gamma == g && p.delta == d) return p.value;
        if (p.gamma == d && p.delta == g) return -p.value;
      }
      throw StructuralError("missing positive structure constant");
    }
    if (!positive(g) && !positive(d)) return -n(-g, -d);
    if (!positive(g)) return -n(d, g);
    // g > 0 > d; zeta = -(g + d) closes the triple g + d + zeta = 0.
    const Root zeta = -s;
    Rational value;
    if (positive(s)) {
      // N_{g,d} / (zeta,zeta) = N_{d,zeta} / (g,g), and d, zeta are negative.
      value = Rational(zeta.length2()) / Rational(g.length2()) * Rational(-n(-d, -zeta));
    } else {
      // N_{g,d} / (zeta,zeta) = N_{zeta,g} / (d,d), and zeta, g are positive.
      value = Rational(zeta.length2()) / Rational(d.length2()) * Rational(n(zeta, g));
    }
    if (!value.is_integer()) throw StructuralError("non-integral structure constant");
    return static_cast<int>(value.num().get_si());
  }

  bool is_root(const Root& r) const { return std::find(roots_.begin(), roots_.end(), r) != roots_.end(); }

 private:
  std::vector<Root> roots_;
  std::vector<PositivePair> pairs_;
};

Vec bracket(const ChevalleyAlgebra& g, const Vec& x, const Vec& y) {
  Vec out{};
  for (std::size_t i = 0; i < kDim; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (!y[j]) continue;
      for (std::size_t k = 0; k < kDim; ++k) out[k] += x[i] * y[j] * g.c(i, j, k);
    }
  }
  return out;
}

Vec unit(std::size_t i) {
  Vec v{};
  v[i] = 1;
  return v;
}

template <class T>
Certificate prop1_core(const ChevalleyAlgebra& g, const T& a, const T& b, const std::string& where) {
  Certificate cert("prop1-differential");
  cert.input("x", "(alpha(x), beta(x)) = (" + text_of(a) + ", " + text_of(b) + ")");
  cert.input("field", where);
  for (const auto& r : g.roots()) {
    const T v = a * int_like(a, r.c1) + b * int_like(b, r.c2);
    if (is_zero_value(v))
      throw PreconditionError("x = (" + text_of(a) + ", " + text_of(b) + ") is not regular over " + where +
                              ": root " + r.name() + " vanishes");
  }
  std::vector<T> coeffs(kDim, zero_like(a));
  coeffs[ChevalleyAlgebra::kH1] = a * int_like(a, 2) + b;
  coeffs[ChevalleyAlgebra::kH2] = a * int_like(a, 3) + b * int_like(b, 2);
  const Matrix<T> ad = adjoint_matrix(g, coeffs);

  bool eigen = true;
  for (std::size_t i = 0; i < g.roots().size(); ++i) {
    const Root& r = g.roots()[i];
    const T v = a * int_like(a, r.c1) + b * int_like(b, r.c2);
    for (std::size_t k = 0; k < kDim; ++k) eigen = eigen && is_zero_value(ad(k, i) - (k == i ? v : zero_like(a)));
  }
  for (std::size_t k = 0; k < kDim; ++k)
    eigen = eigen && is_zero_value(ad(k, ChevalleyAlgebra::kH1)) && is_zero_value(ad(k, ChevalleyAlgebra::kH2));
  cert.require(eigen, "ad(x) e_gamma = gamma(x) e_gamma for all 12 roots and ad(x) t = 0");

  const auto rk = rank_and_kernel(ad);
  cert.require(rk.rank == 12, "rank ad(x) = " + std::to_string(rk.rank));

  Matrix<T> t(kDim, 2, zero_like(a));
  t(ChevalleyAlgebra::kH1, 0) = one_like(a);
  t(ChevalleyAlgebra::kH2, 1) = one_like(a);
  const Matrix<T> image = column_space_basis(ad);
  const auto meet = rank_and_kernel(image.hconcat(t));
  cert.require(meet.kernel.empty(), "dim([x,g] meet t) = " + std::to_string(meet.kernel.size()));
  const std::size_t span = rank(ad.hconcat(t));
  cert.require(span == kDim, "rank [ad(x) | t] = " + std::to_string(span) + " (14 x 16), so [x,g] + t = g");
  return cert;
}

}  // namespace

std::string Root::name() const {
  if (positive(*this)) return positive_name(c1, c2);
  const std::string p = positive_name(-c1, -c2);
  return p.find('+') == std::string::npos ? "-" + p : "-(" + p + ")";
}

int Root::length2() const { return 2 * c1 * c1 - 6 * c1 * c2 + 6 * c2 * c2; }

std::optional<std::size_t> ChevalleyAlgebra::root_index(const Root& r) const {
  const auto it = std::find(roots_.begin(), roots_.end(), r);
  if (it == roots_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

int ChevalleyAlgebra::n(const Root& gamma, const Root& delta) const {
  const auto i = root_index(gamma), j = root_index(delta), k = root_index(gamma + delta);
  if (!i || !j || !k) return 0;
  return c(*i, *j, *k);
}

std::string ChevalleyAlgebra::basis_name(std::size_t i) const {
  if (i == kH1) return "h_alpha";
  if (i == kH2) return "h_beta";
  return "e[" + roots_.at(i).name() + "]";
}

ChevalleyAlgebra build_chevalley_algebra() {
  // Reflection closure of the simple roots.
  std::vector<Root> roots = {{1, 0}, {0, 1}};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Root r = roots[i];
    const Root sa{r.c1 - r.pair_alpha_vee(), r.c2};
    const Root sb{r.c1, r.c2 - r.pair_beta_vee()};
    for (const Root& s : {sa, sb})
      if (std::find(roots.begin(), roots.end(), s) == roots.end()) roots.push_back(s);
  }
  std::vector<Root> pos;
  for (const auto& r : roots)
    if (positive(r)) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
    const int hx = x.c1 + x.c2, hy = y.c1 + y.c2;
    return hx != hy ? hx < hy : x.c1 > y.c1;
  });
  std::vector<Root> ordered = pos;
  for (const auto& r : pos) ordered.push_back(-r);

  const Root alpha{1, 0}, beta{0, 1};
  // Extraspecial pairs carry the sign +; the remaining positive pair is
  // fixed by the Jacobi identity below.
  const std::vector<std::pair<Root, Root>> extraspecial = {
      {alpha, beta}, {alpha, alpha + beta}, {alpha, Root{2, 1}}, {beta, Root{3, 1}}};
  const std::pair<Root, Root> other = {alpha + beta, Root{2, 1}};

  auto build = [&](int sign) {
    std::vector<PositivePair> pairs;
    for (const auto& [g, d] : extraspecial) pairs.push_back({g, d, string_length(ordered, g, d)});
    pairs.push_back({other.first, other.second, sign * string_length(ordered, other.first, other.second)});
    const Builder b(ordered, pairs);
    ChevalleyAlgebra alg;
    alg.roots_ = ordered;
    alg.table_.assign(kDim * kDim * kDim, 0);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, int v) { alg.table_[(i * kDim + j) * kDim + k] = v; };
    for (std::size_t i = 0; i < 12; ++i) {
      const Root& g = ordered[i];
      set(ChevalleyAlgebra::kH1, i, i, g.pair_alpha_vee());
      set(ChevalleyAlgebra::kH2, i, i, g.pair_beta_vee());
      set(i, ChevalleyAlgebra::kH1, i, -g.pair_alpha_vee());
      set(i, ChevalleyAlgebra::kH2, i, -g.pair_beta_vee());
      for (std::size_t j = 0; j < 12; ++j) {
        const Root& d = ordered[j];
        const Root s = g + d;
        if (s.c1 == 0 && s.c2 == 0) {
          // [e_g, e_-g] = h_g, the coroot in the basis h_alpha, h_beta.
          const int sign_g = positive(g) ? 1 : -1;
          const Root p = positive(g) ? g : -g;
          const int u = p.is_long() ? p.c1 / 3 : p.c1, v = p.is_long() ? p.c2 : 3 * p.c2;
          set(i, j, ChevalleyAlgebra::kH1, sign_g * u);
          set(i, j, ChevalleyAlgebra::kH2, sign_g * v);
        } else if (b.is_root(s)) {
          set(i, j, static_cast<std::size_t>(std::find(ordered.begin(), ordered.end(), s) - ordered.begin()), b.n(g, d));
        }
      }
    }
    return alg;
  };

  auto jacobi_failures = [](const ChevalleyAlgebra& alg) {
    std::size_t failures = 0;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        for (std::size_t k = 0; k < kDim; ++k) {
          const Vec x = unit(i), y = unit(j), z = unit(k);
          const Vec a = bracket(alg, bracket(alg, x, y), z), b = bracket(alg, bracket(alg, y, z), x),
                    c = bracket(alg, bracket(alg, z, x), y);
          for (std::size_t m = 0; m < kDim; ++m)
            if (a[m] + b[m] + c[m] != 0) {
              ++failures;
              break;
            }
        }
    return failures;
  };

  ChevalleyAlgebra plus = build(1), minus = build(-1);
  const std::size_t fp = jacobi_failures(plus), fm = jacobi_failures(minus);
  ChevalleyAlgebra alg = fp == 0 ? std::move(plus) : std::move(minus);
  const int chosen = fp == 0 ? 1 : -1;

  Certificate& c = alg.cert_;
  c.name = "chevalley-algebra";
  c.input("simple roots", "alpha short, beta long, <alpha,beta^vee> = -1, <beta,alpha^vee> = -3");
  c.require(ordered.size() == 12, "reflection closure yields " + std::to_string(ordered.size()) + " roots");
  std::string listing;
  for (const auto& r : pos) listing += (listing.empty() ? "" : ", ") + r.name();
  c.witness("positive roots: " + listing);
  c.require(ordered.size() + 2 == kDim, "dimension 14 = 12 roots + rank 2");
  bool closed = true;
  for (const auto& r : ordered) {
    closed = closed && std::find(ordered.begin(), ordered.end(), Root{r.c1 - r.pair_alpha_vee(), r.c2}) != ordered.end();
    closed = closed && std::find(ordered.begin(), ordered.end(), Root{r.c1, r.c2 - r.pair_beta_vee()}) != ordered.end();
  }
  c.require(closed, "root set closed under both simple reflections");
  c.require((fp == 0) != (fm == 0), "sign of N[alpha+beta, 2alpha+beta] fixed to " + std::string(chosen > 0 ? "+" : "-") +
                                        " by the Jacobi identity (other sign: " +
                                        std::to_string(chosen > 0 ? fm : fp) + " failing triples)");

  bool antisym = true;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k) antisym = antisym && alg.c(i, j, k) == -alg.c(j, i, k);
  c.require(antisym, "antisymmetry c(a,b) = -c(b,a)");
  const std::size_t failures = jacobi_failures(alg);
  c.require(failures == 0, "Jacobi identity on all 2744 basis triples over Z (" + std::to_string(failures) +
                               " failures)");

  bool cartan = true;
  for (std::size_t i = 0; i < 12; ++i) {
    const Root& r = ordered[i];
    for (std::size_t k = 0; k < kDim; ++k) {
      cartan = cartan && alg.c(ChevalleyAlgebra::kH1, i, k) == (k == i ? r.pair_alpha_vee() : 0);
      cartan = cartan && alg.c(ChevalleyAlgebra::kH2, i, k) == (k == i ? r.pair_beta_vee() : 0);
    }
  }
  c.require(cartan, "[h, e_gamma] = gamma(h) e_gamma for both h and all roots");

  bool magnitudes = true;
  for (const auto& g : ordered)
    for (const auto& d : ordered) {
      if (!(std::find(ordered.begin(), ordered.end(), g + d) != ordered.end())) continue;
      magnitudes = magnitudes && std::abs(alg.n(g, d)) == string_length(ordered, g, d);
    }
  c.require(magnitudes, "|N[gamma,delta]| = p + 1 for every pair with gamma + delta a root");
  if (!c.ok) throw StructuralError("Chevalley algebra certification failed: " + c.message);
  return alg;
}

Scalar root_value(const Root& r, const CartanElement& x) {
  const Field& k = x.a.field();
  return x.a * k.from_int(r.c1) + x.b * k.from_int(r.c2);
}

Certificate prop1_differential_check(const ChevalleyAlgebra& g, const CartanElement& x) {
  return prop1_core(g, x.a, x.b, x.a.field().name());
}

Certificate prop1_generic_check(const ChevalleyAlgebra& g, const Field& base) {
  const PolyRing r(base, {"a", "b"});
  Certificate c = prop1_core(g, RationalFunction(r.var("a")), RationalFunction(r.var("b")), base.name() + "(a,b)");
  c.name = "prop1-differential-generic";
  return c;
}

Certificate regular_element_search(const Field& k, std::optional<CartanElement>* found) {
  if (k.kind() != FieldKind::prime) throw PreconditionError("regular element search needs a prime field");
  const ChevalleyAlgebra g = build_chevalley_algebra();
  Certificate c("regular-element-search");
  c.input("field", k.name());
  const std::uint64_t p = k.modulus_prime();
  std::vector<CartanElement> points;
  points.push_back({k.zero(), k.one()});
  for (std::uint64_t t = 0; t < p; ++t) points.push_back({k.one(), k.from_int(static_cast<long>(t))});
  std::vector<std::string> killed;
  for (const auto& x : points) {
    std::optional<Root> zero;
    for (const auto& r : g.roots())
      if (positive(r) && root_value(r, x).is_zero()) {
        zero = r;
        break;
      }
    const std::string label = "(" + x.a.to_string() + ":" + x.b.to_string() + ")";
    if (!zero) {
      c.witness("regular point " + label);
      if (found) *found = x;
      return c;
    }
    killed.push_back(label + " killed by " + zero->name());
  }
  std::string all;
  for (const auto& s : killed) all += (all.empty() ? "" : "; ") + s;
  c.require(false, "no regular element in t(" + k.name() + "): " + all);
  return c;
}

}  // namespace g2cert
