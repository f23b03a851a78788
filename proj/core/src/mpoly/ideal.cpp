#include "g2cert/mpoly/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <utility>

#include "g2cert/error.hpp"

namespace g2cert {

namespace {

Monomial quotient_monomial(const Monomial& a, const Monomial& b) {
  Monomial q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

std::vector<MultiPoly> interreduce(std::vector<MultiPoly> g) {
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].leading_monomial(), g[i].leading_monomial())) continue;
      // Equal leading monomials: keep the one with the smaller index.
      redundant = g[j].leading_monomial() != g[i].leading_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const MultiPoly lead = minimal[i].ring().monomial(minimal[i].leading_monomial(), minimal[i].leading_coefficient());
    reduced.push_back((lead + reduce(minimal[i] - lead, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return grevlex_greater(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

}  // namespace

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& divisors) {
  MultiPoly p = f, r(f.ring());
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Scalar lc = p.leading_coefficient();
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero() || !divides(g.leading_monomial(), lm)) continue;
      p -= g.mul_term(quotient_monomial(lm, g.leading_monomial()), lc / g.leading_coefficient());
      divided = true;
      break;
    }
    if (!divided) {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return r;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(quotient_monomial(l, f.leading_monomial()), f.leading_coefficient().inv()) -
         g.mul_term(quotient_monomial(l, g.leading_monomial()), g.leading_coefficient().inv());
}

bool is_groebner(const std::vector<MultiPoly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators, const GroebnerLimits& limits) {
  if (generators.size() > limits.max_generators)
    throw ResourceError("Groebner basis: " + std::to_string(generators.size()) + " generators exceed the cap of " +
                        std::to_string(limits.max_generators));
  if (generators.empty()) return {};
  const PolyRing& ring = generators.front().ring();
  if (ring.nvars() > limits.max_variables)
    throw ResourceError("Groebner basis: " + std::to_string(ring.nvars()) + " variables exceed the cap of " +
                        std::to_string(limits.max_variables));

  std::vector<MultiPoly> g;
  for (const auto& f : generators) {
    if (!(f.ring() == ring)) throw DomainMismatchError("Groebner basis: generators live in different rings");
    if (!f.is_zero()) g.push_back(f.monic());
  }
  if (g.empty()) return {};

  using Pair = std::pair<std::size_t, std::size_t>;
  std::vector<Pair> queue;
  std::set<Pair> done;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) queue.emplace_back(i, j);

  auto pair_lcm = [&](const Pair& p) { return monomial_lcm(g[p.first].leading_monomial(), g[p.second].leading_monomial()); };
  auto processed = [&](std::size_t a, std::size_t b) { return done.count({std::min(a, b), std::max(a, b)}) > 0; };

  std::size_t pairs = 0;
  while (!queue.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
      return grevlex_greater(pair_lcm(b), pair_lcm(a));
    });
    const Pair p = *best;
    queue.erase(best);
    const Monomial l = pair_lcm(p);
    const Monomial& li = g[p.first].leading_monomial();
    const Monomial& lj = g[p.second].leading_monomial();
    bool skip = coprime(li, lj);
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == p.first || k == p.second) continue;
      skip = divides(g[k].leading_monomial(), l) && processed(p.first, k) && processed(p.second, k);
    }
    done.insert(p);
    if (skip) continue;
    if (++pairs > limits.max_pairs)
      throw ResourceError("Groebner basis: pair budget of " + std::to_string(limits.max_pairs) + " exhausted");
    MultiPoly r = reduce(s_polynomial(g[p.first], g[p.second]), g);
    if (r.is_zero()) continue;
    if (g.size() >= limits.max_basis)
      throw ResourceError("Groebner basis: intermediate basis exceeds " + std::to_string(limits.max_basis) +
                          " elements");
    g.push_back(r.monic());
    if (g.back().is_constant()) return {ring.one()};
    for (std::size_t i = 0; i + 1 < g.size(); ++i) queue.emplace_back(i, g.size() - 1);
  }

  std::vector<MultiPoly> result = interreduce(std::move(g));
  if (!is_groebner(result)) throw StructuralError("Groebner basis certification failed: an S-polynomial is nonzero");
  return result;
}

struct IdealBasis::Cache {
  std::once_flag once;
  std::vector<MultiPoly> groebner;
};

IdealBasis::IdealBasis(PolyRing ring, std::vector<MultiPoly> generators, GroebnerLimits limits)
    : ring_(std::move(ring)), generators_(std::move(generators)), limits_(limits), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_)
    if (!(g.ring() == ring_)) throw DomainMismatchError("ideal generator lives in a different ring");
}

const std::vector<MultiPoly>& IdealBasis::groebner() const {
  std::call_once(cache_->once, [this] { cache_->groebner = buchberger(generators_, limits_); });
  return cache_->groebner;
}

MultiPoly IdealBasis::normal_form(const MultiPoly& f) const {
  if (!(f.ring() == ring_)) throw DomainMismatchError("normal form: polynomial lives in a different ring");
  return reduce(f, groebner());
}

bool IdealBasis::is_unit() const { return normal_form(ring_.one()).is_zero(); }

std::string IdealBasis::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? ", " : "") + generators_[i].to_string();
  return s;
}

MultiPoly normal_form(const MultiPoly& f, const IdealBasis& ideal) { return ideal.normal_form(f); }

}  // namespace g2cert
