#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "speh/error.hpp"
#include "speh/rational.hpp"

namespace speh {

/// Dense row-major matrix over the rationals. Sizes are small (at most a few
/// dozen), so everything is plain Gauss-Jordan.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix diagonal(std::span<const Rational> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  /// Permutation matrix P with P·e_i = e_{image[i]} (0-based images).
  static Matrix permutation(std::span<const int> image) {
    Matrix m(image.size(), image.size());
    for (std::size_t i = 0; i < image.size(); ++i) m(static_cast<std::size_t>(image[i]), i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != 0) return false;
    return true;
  }

  /// Each row and each column has exactly one nonzero entry.
  bool is_monomial() const {
    if (!square()) return false;
    std::vector<int> col_count(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      int row_count = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) {
          ++row_count;
          ++col_count[j];
        }
      if (row_count != 1) return false;
    }
    return std::all_of(col_count.begin(), col_count.end(), [](int c) { return c == 1; });
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  /// Reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c) == 0) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      const Rational inv = 1 / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == 0) continue;
        const Rational f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref_in_place().size();
  }

  Rational determinant() const {
    if (!square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    Matrix m = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c) == 0) ++p;
      if (p == rows_) return 0;
      if (p != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m(i, c) == 0) continue;
        const Rational f = m(i, c) / m(c, c);
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  Matrix inverse() const {
    if (!square()) throw Error(ErrorCode::NotInvertible, "non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    aug.set_block(0, 0, *this);
    aug.set_block(0, n, identity(n));
    auto pivots = aug.rref_in_place();
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorCode::NotInvertible, "singular matrix");
    return aug.block(0, n, n, n);
  }

  /// Basis of the right null space {x : A x = 0}, one column vector per entry.
  std::vector<std::vector<Rational>> kernel() const {
    Matrix m = *this;
    auto pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rational> v(cols_);
      v[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Unique solution of A x = b for A with full column rank, or nullopt if the
  /// system is inconsistent.
  std::optional<std::vector<Rational>> solve(std::span<const Rational> b) const {
    if (b.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "right-hand side");
    Matrix aug(rows_, cols_ + 1);
    aug.set_block(0, 0, *this);
    for (std::size_t i = 0; i < rows_; ++i) aug(i, cols_) = b[i];
    auto pivots = aug.rref_in_place();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    if (pivots.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "system is underdetermined");
    std::vector<Rational> x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
    return x;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i == 0 ? "[" : " ") << "[";
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << to_string((*this)(i, j));
      os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace speh
