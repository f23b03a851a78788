#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2cert/arith/field.hpp"
#include "g2cert/certificate.hpp"
#include "g2cert/mpoly/ratfunc.hpp"

namespace g2cert {

/// Root c1*alpha + c2*beta, alpha short and beta long, with Cartan
/// pairings <alpha, beta^vee> = -1 and <beta, alpha^vee> = -3.
struct Root {
  int c1 = 0;
  int c2 = 0;
  friend bool operator==(const Root&, const Root&) = default;
  Root operator-() const { return {-c1, -c2}; }
  friend Root operator+(const Root& a, const Root& b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
  /// "alpha", "3alpha+2beta", "-(alpha+beta)".
  std::string name() const;
  /// Squared length under (alpha, alpha) = 2, (beta, beta) = 6.
  int length2() const;
  bool is_long() const { return length2() == 6; }
  int pair_alpha_vee() const { return 2 * c1 - 3 * c2; }
  int pair_beta_vee() const { return -c1 + 2 * c2; }
};

/// 14-dimensional Lie algebra of type G2 in a Chevalley basis: e_gamma for
/// the 12 roots (positive roots by height, then their negatives), then
/// h1 = h_alpha and h2 = h_beta. Structure constants are integers.
class ChevalleyAlgebra {
 public:
  static constexpr std::size_t kDim = 14;
  static constexpr std::size_t kH1 = 12;
  static constexpr std::size_t kH2 = 13;

  const std::vector<Root>& roots() const { return roots_; }
  std::optional<std::size_t> root_index(const Root& r) const;
  /// Coefficient of basis element k in [b_i, b_j].
  int c(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * kDim + j) * kDim + k]; }
  /// N_{gamma,delta} for roots with gamma + delta a root, else 0.
  int n(const Root& gamma, const Root& delta) const;
  std::string basis_name(std::size_t i) const;

  /// Reflection closure, antisymmetry, Jacobi on all basis triples over Z,
  /// and [h, e_gamma] = gamma(h) e_gamma.
  const Certificate& certificate() const { return cert_; }

 private:
  friend ChevalleyAlgebra build_chevalley_algebra();
  std::vector<Root> roots_;
  std::vector<int> table_;
  Certificate cert_;
};

/// Builds the algebra; the one sign not fixed by the extraspecial-pair
/// convention is chosen so that the Jacobi identity holds. Raises
/// StructuralError if certification fails.
ChevalleyAlgebra build_chevalley_algebra();

/// Element of the Cartan subalgebra given by its simple root values
/// a = alpha(x), b = beta(x); x = (2a + b) h_alpha + (3a + 2b) h_beta.
struct CartanElement {
  Scalar a;
  Scalar b;
};

/// Value gamma(x) = c1 a + c2 b.
Scalar root_value(const Root& r, const CartanElement& x);

/// For x regular: rank ad(x) = 12, [x, g] meets t only in 0, and
/// [x, g] + t = g. PreconditionError naming a vanishing root otherwise.
Certificate prop1_differential_check(const ChevalleyAlgebra& g, const CartanElement& x);

/// The same check for the generic element x = (a, b) over F(a, b).
Certificate prop1_generic_check(const ChevalleyAlgebra& g, const Field& base);

/// Exhaustive search of P^1(F_p) for a regular element; the certificate
/// is ok when one exists and lists the first one found, otherwise it
/// records, for every point, a root vanishing there.
Certificate regular_element_search(const Field& prime_field, std::optional<CartanElement>* found = nullptr);

/// Matrix of ad(x) for x = sum coeffs[i] b_i over any coefficient ring.
template <class T>
Matrix<T> adjoint_matrix(const ChevalleyAlgebra& g, const std::vector<T>& coeffs) {
  Matrix<T> m(ChevalleyAlgebra::kDim, ChevalleyAlgebra::kDim, zero_like(coeffs.at(0)));
  for (std::size_t i = 0; i < ChevalleyAlgebra::kDim; ++i) {
    if (is_zero_value(coeffs[i])) continue;
    for (std::size_t j = 0; j < ChevalleyAlgebra::kDim; ++j)
      for (std::size_t k = 0; k < ChevalleyAlgebra::kDim; ++k) {
        const int s = g.c(i, j, k);
        if (s == 0) continue;
        // Column j is the image of b_j.
        m(k, j) = m(k, j) + coeffs[i] * int_like(coeffs[i], s);
      }
  }
  return m;
}

}  // namespace g2cert
