#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "g2cert/mpoly/poly.hpp"

namespace g2cert {

/// Hard caps for Buchberger's algorithm. Exceeding any of them raises
/// ResourceError; nothing is truncated silently.
struct GroebnerLimits {
  std::size_t max_generators = 6;
  std::size_t max_variables = 8;
  std::size_t max_pairs = 20000;
  std::size_t max_basis = 400;
};

/// Remainder of f under full multivariate division by `divisors`.
MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& divisors);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

/// True when every S-polynomial of `basis` reduces to zero modulo `basis`.
bool is_groebner(const std::vector<MultiPoly>& basis);

/// Reduced Groebner basis (monic, sorted by descending leading monomial)
/// under the grevlex order. The output is certified with is_groebner
/// before it is returned; a failed certification raises StructuralError.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators, const GroebnerLimits& limits = {});

/// Ideal given by generators, with a lazily computed reduced Groebner basis
/// shared by all copies and computed at most once.
class IdealBasis {
 public:
  IdealBasis(PolyRing ring, std::vector<MultiPoly> generators, GroebnerLimits limits = {});

  const PolyRing& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  const std::vector<MultiPoly>& groebner() const;

  MultiPoly normal_form(const MultiPoly& f) const;
  bool contains(const MultiPoly& f) const { return normal_form(f).is_zero(); }
  bool is_unit() const;

  /// Generators as canonical text, comma separated.
  std::string to_string() const;

 private:
  struct Cache;
  PolyRing ring_;
  std::vector<MultiPoly> generators_;
  GroebnerLimits limits_;
  std::shared_ptr<Cache> cache_;
};

MultiPoly normal_form(const MultiPoly& f, const IdealBasis& ideal);

}  // namespace g2cert
