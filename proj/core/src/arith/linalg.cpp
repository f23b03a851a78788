#include "g2cert/arith/matrix.hpp"

namespace g2cert {

std::vector<Scalar> characteristic_polynomial(const ScalarMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw DomainMismatchError("characteristic polynomial of a non-square matrix");
  const Field& k = a.zero().field();
  if (k.characteristic() != 0 && k.characteristic() <= n)
    throw UnsupportedError("Faddeev-LeVerrier needs characteristic 0 or > n");
  std::vector<Scalar> c(n + 1, k.zero());
  c[n] = k.one();
  ScalarMatrix m = scalar_matrix(k, n, n);
  const ScalarMatrix id = ScalarMatrix::identity(n, k.zero());
  for (std::size_t step = 1; step <= n; ++step) {
    ScalarMatrix scaled_id = id;
    for (std::size_t i = 0; i < n; ++i) scaled_id(i, i) = c[n - step + 1];
    m = a * m + scaled_id;
    const ScalarMatrix am = a * m;
    Scalar tr = k.zero();
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - step] = -tr / k.from_int(static_cast<long>(step));
  }
  return c;
}

}  // namespace g2cert
