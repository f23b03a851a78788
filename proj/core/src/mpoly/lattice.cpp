#include "g2cert/mpoly/lattice.hpp"

#include "g2cert/error.hpp"

namespace g2cert {

KernelLattice laurent_kernel_lattice(const IntMatrix& weights) {
  const SmithForm s = smith_normal_form(weights);
  KernelLattice k;
  k.weight_rank = s.rank();
  k.ambient = weights.cols();
  for (std::size_t j = s.rank(); j < weights.cols(); ++j) k.basis.push_back(s.V.column(j));
  return k;
}

SublatticeIndex sublattice_index(const std::vector<IntVector>& basis, const std::vector<IntVector>& vectors) {
  SublatticeIndex out;
  if (basis.empty()) {
    out.contained = true;
    for (const auto& v : vectors) {
      for (const auto& x : v)
        if (x != 0) out.contained = false;
      out.coordinates.emplace_back();
    }
    if (out.contained) out.index = Integer(1);
    return out;
  }
  const std::size_t n = basis.front().size(), k = basis.size();
  IntMatrix b(n, k, Integer(0));
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n) throw DomainMismatchError("lattice basis vectors differ in length");
    for (std::size_t i = 0; i < n; ++i) b(i, j) = basis[j][i];
  }
  IntMatrix c(k, vectors.size(), Integer(0));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != n) throw DomainMismatchError("vector length differs from the lattice ambient");
    const auto x = solve_integer(b, vectors[j]);
    if (!x) return out;
    out.coordinates.push_back(*x);
    for (std::size_t i = 0; i < k; ++i) c(i, j) = (*x)[i];
  }
  out.contained = true;
  const SmithForm s = smith_normal_form(c);
  if (s.rank() < k) return out;
  Integer idx = 1;
  for (const auto& d : s.divisors) idx *= d;
  out.index = idx;
  return out;
}

std::string SublatticeIndex::describe() const {
  if (!contained) return "not contained in the lattice";
  if (!index) return "index infinite (span has lower rank)";
  return "index " + index->get_str();
}

}  // namespace g2cert
