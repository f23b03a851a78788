#include "g2cert/arith/smith.hpp"

namespace g2cert {

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c, Integer(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainMismatchError("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += k * m(source, j);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += k * m(i, source);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows, Integer(0));
  IntMatrix v = IntMatrix::identity(cols, Integer(0));

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block goes to (t, t).
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    a.swap_rows(t, pi);
    u.swap_rows(t, pi);
    a.swap_cols(t, pj);
    v.swap_cols(t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        add_row_multiple(a, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        add_col_multiple(a, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived: bring the smallest one in row/column t to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
        a.swap_rows(t, bi);
        u.swap_rows(t, bi);
        a.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold an offending row into row t and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row_multiple(a, t, i, Integer(1));
            add_row_multiple(u, t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }

  SmithForm out{u, a, v, {}};
  for (std::size_t k = 0; k < t; ++k) out.divisors.push_back(a(k, k));
  return out;
}

Integer integer_determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw DomainMismatchError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = num / prev;  // exact by Sylvester's identity
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b) {
  if (b.size() != a.rows()) throw DomainMismatchError("solve_integer: right-hand side size mismatch");
  const SmithForm s = smith_normal_form(a);
  const std::vector<Integer> ub = s.U.apply(b);
  std::vector<Integer> y(a.cols(), Integer(0));
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank()) {
      if (ub[i] % s.divisors[i] != 0) return std::nullopt;
      y[i] = ub[i] / s.divisors[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

}  // namespace g2cert
