#pragma once

#include "scx/error.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace scx::algebra {

/// Dense row-major matrix. Entries carry their own ring (field scalars,
/// Laurent polynomials, integers), so zero/one values are passed in.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const {
    if (empty()) return Matrix(cols_, rows_, T{});
    Matrix t(cols_, rows_, data_.front());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Product with an explicit zero, so that empty inner dimensions work.
  Matrix multiply(const Matrix& o, const T& zero) const {
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    Matrix out(rows_, o.cols_, zero);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (is_zero_entry(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const T& b = o(k, j);
          if (is_zero_entry(b)) continue;
          out(i, j) += a * b;
        }
      }
    return out;
  }

  /// Copies `block` into this matrix at (r0, c0), adding `scale` times it.
  template <class S>
  void add_block(std::size_t r0, std::size_t c0, const Matrix& block,
                 const S& scale) {
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j)
        if (!is_zero_entry(block(i, j))) (*this)(r0 + i, c0 + j) += scale * block(i, j);
  }

  Matrix submatrix(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols, const T& zero) const {
    Matrix out(rows.size(), cols.size(), zero);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        out(i, j) = (*this)(rows[i], cols[j]);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!is_zero_entry(x)) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r)
      std::swap((*this)(r, a), (*this)(r, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  static bool is_zero_entry(const T& x) {
    if constexpr (requires { x.is_zero(); })
      return x.is_zero();
    else
      return x == 0;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Stacks matrices with equal row counts side by side.
template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.rows() != b.rows()) throw Error("hconcat row mismatch");
  Matrix<T> out(a.rows(), a.cols() + b.cols(), zero);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

} // namespace scx::algebra
