#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "intervals/errors.hpp"
#include "intervals/exact.hpp"

namespace intervals {

// Dense matrix over a commutative ring. Zero-row and zero-column shapes are
// legal values; every operation below must keep working for them.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {
    assert(rows >= 0 && cols >= 0);
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const T& v : a_)
      if (v != T(0)) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        if (v == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (T& v : r.a_) v = -v;
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (T& v : r.a_) v *= s;
    return r;
  }

  T trace() const {
    assert(rows_ == cols_);
    T t(0);
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  // Columns [c0, c1) as a new matrix.
  Matrix columns(int c0, int c1) const {
    Matrix r(rows_, c1 - c0);
    for (int i = 0; i < rows_; ++i)
      for (int j = c0; j < c1; ++j) r(i, j - c0) = (*this)(i, j);
    return r;
  }

  // Horizontal concatenation [this | o].
  Matrix augmented(const Matrix& o) const {
    assert(rows_ == o.rows_);
    Matrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

inline Matrix<Rat> to_rational(const Matrix<Int>& m) {
  Matrix<Rat> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// Throws ValidationError when an entry is not integral.
inline Matrix<Int> to_integer(const Matrix<Rat>& m) {
  Matrix<Int> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) != 1)
        throw ValidationError("matrix entry is not an integer");
      r(i, j) = numerator(m(i, j));
    }
  return r;
}

// In-place reduced row echelon form; returns pivot columns in order.
inline std::vector<int> rref_in_place(Matrix<Rat>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rat inv = m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) /= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(const Matrix<Rat>& m) {
  Matrix<Rat> c = m;
  return static_cast<int>(rref_in_place(c).size());
}

// Basis of { v : m v = 0 }, one column per free variable, in ascending
// free-column order. Canonical: the free coordinate of each vector is 1.
inline Matrix<Rat> null_space(const Matrix<Rat>& m) {
  Matrix<Rat> c = m;
  std::vector<int> pivots = rref_in_place(c);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<Rat> basis(m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis(f, static_cast<int>(k)) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<int>(k)) = -c(static_cast<int>(r), f);
  }
  return basis;
}

// Exact solve A X = B. Returns nullopt when inconsistent; free variables are
// set to zero, so the result is deterministic.
inline std::optional<Matrix<Rat>> solve(const Matrix<Rat>& a, const Matrix<Rat>& b) {
  assert(a.rows() == b.rows());
  Matrix<Rat> aug = a.augmented(b);
  std::vector<int> pivots = rref_in_place(aug);
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;  // pivot in the B block
  Matrix<Rat> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      x(pivots[r], j) = aug(static_cast<int>(r), a.cols() + j);
  return x;
}

// Basis of the column space: the pivot columns of m, kept verbatim in
// left-to-right order.
inline Matrix<Rat> column_space_basis(const Matrix<Rat>& m) {
  Matrix<Rat> c = m;
  std::vector<int> pivots = rref_in_place(c);
  Matrix<Rat> basis(m.rows(), static_cast<int>(pivots.size()));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (int i = 0; i < m.rows(); ++i) basis(i, static_cast<int>(k)) = m(i, pivots[k]);
  return basis;
}

// Standard basis vectors extending the (independent) columns of b to the full
// space, returned as their indices. Deterministic: smallest indices first.
inline std::vector<int> complement_indices(const Matrix<Rat>& b) {
  Matrix<Rat> aug = b.augmented(Matrix<Rat>::identity(b.rows()));
  std::vector<int> pivots = rref_in_place(aug);
  std::vector<int> result;
  for (int p : pivots)
    if (p >= b.cols()) result.push_back(p - b.cols());
  return result;
}

// Inverse of an upper unitriangular integer matrix by back substitution; the
// inverse is again integral. Throws SingularError when the diagonal is not all
// ones.
inline Matrix<Int> unitriangular_inverse(const Matrix<Int>& u) {
  int n = u.rows();
  assert(u.cols() == n);
  for (int i = 0; i < n; ++i)
    if (u(i, i) != 1) throw SingularError("Cartan matrix is not unitriangular");
  Matrix<Int> r(n, n);
  for (int c = 0; c < n; ++c)
    for (int i = n - 1; i >= 0; --i) {
      Int acc = (i == c) ? 1 : 0;
      for (int k = i + 1; k < n; ++k) acc -= u(i, k) * r(k, c);
      r(i, c) = acc;
    }
  return r;
}

}  // namespace intervals
