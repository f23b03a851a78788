#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "g2cert/arith/field.hpp"
#include "g2cert/error.hpp"

namespace g2cert {

// Ring identity hooks for the generic algorithms below. Element types with
// a runtime context (Scalar, RationalFunction) build 0 and 1 from an
// existing element; other types overload these next to their definition.
inline Scalar zero_like(const Scalar& s) { return s.field().zero(); }
inline Scalar one_like(const Scalar& s) { return s.field().one(); }
inline Integer zero_like(const Integer&) { return 0; }
inline Integer one_like(const Integer&) { return 1; }
inline Scalar int_like(const Scalar& s, long n) { return s.field().from_int(n); }
inline Integer int_like(const Integer&, long n) { return n; }
inline bool is_zero_value(const Integer& v) { return v == 0; }
inline bool is_zero_value(const Scalar& v) { return v.is_zero(); }
inline std::string text_of(const Integer& v) { return v.get_str(); }
inline std::string text_of(const Scalar& v) { return v.to_string(); }

/// Dense row-major matrix. Carries its zero element so that empty and
/// freshly allocated matrices know their ring.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, T zero)
      : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const T& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& zero) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c, zero);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DomainMismatchError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// [this | other], same row count.
  Matrix hconcat(const Matrix& other) const {
    if (other.rows_ != rows_) throw DomainMismatchError("hconcat: row counts differ");
    Matrix m(rows_, cols_ + other.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainMismatchError("matrix product: inner dimensions differ");
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero_value(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw DomainMismatchError("matrix-vector product: size mismatch");
    std::vector<T> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return is_zero_value(x); });
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << text_of((*this)(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainMismatchError("matrix shapes differ");
  }

  std::size_t rows_;
  std::size_t cols_;
  T zero_;
  std::vector<T> data_;
};

template <class T>
struct RowEchelon {
  Matrix<T> reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination over a field: first nonzero entry as pivot.
template <class T>
RowEchelon<T> row_reduce(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero_value(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const T inv = one_like(m.zero()) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero_value(m(i, c))) continue;
      const T factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (is_zero_value(m(r, j))) continue;
        m(i, j) = m(i, j) - factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
struct RankKernel {
  std::size_t rank = 0;
  std::vector<std::vector<T>> kernel;  // basis of {v : M v = 0}
};

/// Exact rank and right-kernel basis; rank + kernel.size() == cols.
template <class T>
RankKernel<T> rank_and_kernel(const Matrix<T>& m) {
  RowEchelon<T> e = row_reduce(m);
  RankKernel<T> out;
  out.rank = e.rank();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), m.zero());
    v[free] = one_like(m.zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).rank();
}

/// Basis of the column space, as a subset of the original columns.
template <class T>
Matrix<T> column_space_basis(const Matrix<T>& m) {
  RowEchelon<T> e = row_reduce(m);
  Matrix<T> b(m.rows(), e.pivots.size(), m.zero());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = m(i, e.pivots[k]);
  return b;
}

template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw DomainMismatchError("determinant of a non-square matrix");
  T det = one_like(m.zero());
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero_value(m(p, c))) ++p;
    if (p == n) return m.zero();
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det = det * m(c, c);
    const T inv = one_like(m.zero()) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero_value(m(i, c))) continue;
      const T factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - factor * m(c, j);
    }
  }
  return det;
}

/// A particular solution of M x = b, or nullopt when inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  if (b.size() != m.rows()) throw DomainMismatchError("solve: right-hand side size mismatch");
  Matrix<T> aug(m.rows(), m.cols() + 1, m.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon<T> e = row_reduce(std::move(aug));
  std::vector<T> x(m.cols(), m.zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

/// Inverse of a square matrix over a field; throws ArithmeticError if singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainMismatchError("inverse of a non-square matrix");
  RowEchelon<T> e = row_reduce(m.hconcat(Matrix<T>::identity(n, m.zero())));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw ArithmeticError("matrix is singular");
  Matrix<T> inv(n, n, m.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

using ScalarMatrix = Matrix<Scalar>;
using IntMatrix = Matrix<Integer>;

inline ScalarMatrix scalar_matrix(const Field& f, std::size_t rows, std::size_t cols) {
  return ScalarMatrix(rows, cols, f.zero());
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);

/// Characteristic polynomial coefficients det(tI - M), constant term first,
/// by the Faddeev-LeVerrier recurrence. Requires characteristic 0 or > n.
std::vector<Scalar> characteristic_polynomial(const ScalarMatrix& m);

}  // namespace g2cert
