#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2cert/arith/smith.hpp"

namespace g2cert {

using IntVector = std::vector<Integer>;

/// Lattice of Laurent exponents e in Z^n with weights * e = 0.
struct KernelLattice {
  std::vector<IntVector> basis;  // a Z-basis of the kernel
  std::size_t weight_rank = 0;   // rank of the weight matrix
  std::size_t ambient = 0;       // n, the number of variables
};

/// Kernel lattice of an integer weight matrix (one column per variable),
/// read off from the last columns of V in U * W * V = D.
KernelLattice laurent_kernel_lattice(const IntMatrix& weights);

/// Relation of a list of vectors to a lattice.
struct SublatticeIndex {
  bool contained = false;          // every vector lies in the lattice
  std::optional<Integer> index;    // [lattice : span], nullopt when infinite
  std::vector<IntVector> coordinates;  // coordinates of each vector in the lattice basis
  std::string describe() const;
};

/// Index of the span of `vectors` inside the lattice with Z-basis `basis`.
SublatticeIndex sublattice_index(const std::vector<IntVector>& basis, const std::vector<IntVector>& vectors);

}  // namespace g2cert
