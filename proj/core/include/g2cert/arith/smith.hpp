#pragma once

#include <optional>
#include <vector>

#include "g2cert/arith/matrix.hpp"

namespace g2cert {

/// U * M * V = D with U, V unimodular and D diagonal; the nonzero diagonal
/// entries are positive and form a divisibility chain d1 | d2 | ...
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Integer> divisors;  // the nonzero diagonal entries
  std::size_t rank() const { return divisors.size(); }
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer integer_determinant(const IntMatrix& m);

/// An integer solution of A x = b, or nullopt if none exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b);

}  // namespace g2cert
