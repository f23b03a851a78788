#include "qpoly.hpp"

#include <algorithm>
#include <set>

#include "g2cert/error.hpp"

namespace g2cert::qpoly {

void trim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b) {
  Coeffs bb = b;
  trim(bb);
  if (bb.empty()) throw ArithmeticError("polynomial division by zero");
  Coeffs r = a;
  trim(r);
  if (r.size() < bb.size()) return {{}, r};
  Coeffs q(r.size() - bb.size() + 1);
  const Rational lead_inv = bb.back().inv();
  while (!r.empty() && r.size() >= bb.size()) {
    const std::size_t shift = r.size() - bb.size();
    const Rational c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) r[shift + i] -= c * bb[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

Coeffs reduce(const Coeffs& a, const Coeffs& f) {
  Coeffs r = divmod(a, f).second;
  r.resize(f.size() - 1);
  return r;
}

std::tuple<Coeffs, Coeffs, Coeffs> xgcd(const Coeffs& a, const Coeffs& b) {
  Coeffs r0 = a, r1 = b, s0 = {Rational(1)}, s1 = {}, t0 = {}, t1 = {Rational(1)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    auto sub = [](const Coeffs& x, const Coeffs& y) {
      Coeffs out(std::max(x.size(), y.size()));
      for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
      for (std::size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
      trim(out);
      return out;
    };
    Coeffs s2 = sub(s0, mul(q, s1));
    Coeffs t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.empty()) {
    const Rational inv = r0.back().inv();
    for (auto& c : r0) c *= inv;
    for (auto& c : s0) c *= inv;
    for (auto& c : t0) c *= inv;
  }
  return {r0, s0, t0};
}

Rational eval(const Coeffs& a, const Rational& x) {
  Rational acc;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

// Positive divisors by trial division; fine for the small coefficients the
// toolkit handles, and bounded so a hostile input cannot hang it.
std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > Integer("1000000000000000000"))
    throw UnsupportedError("rational-root test: coefficient too large for trial division");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Coeffs& input) {
  Coeffs a = input;
  trim(a);
  if (a.empty()) throw ArithmeticError("rational roots of the zero polynomial");
  std::set<Rational> roots;
  // Strip the factor x^k first so the constant term is nonzero.
  std::size_t low = 0;
  while (a[low].is_zero()) ++low;
  if (low > 0) roots.insert(Rational(0));
  Coeffs b(a.begin() + static_cast<std::ptrdiff_t>(low), a.end());
  if (b.size() <= 1) return {roots.begin(), roots.end()};
  // Primitive integer model.
  Integer den_lcm = 1;
  for (const auto& c : b) den_lcm = lcm(den_lcm, c.den());
  std::vector<Integer> ints;
  for (const auto& c : b) ints.push_back((c * Rational(den_lcm)).num());
  for (const Integer& p : divisors(ints.front())) {
    for (const Integer& q : divisors(ints.back())) {
      for (int sign : {1, -1}) {
        const Rational cand(sign * p, q);
        if (eval(b, cand).is_zero()) roots.insert(cand);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace g2cert::qpoly
