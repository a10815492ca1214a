#include "scx/algebra/linalg.hpp"

namespace scx::algebra {

FieldMatrix zeros(Field f, std::size_t rows, std::size_t cols) {
  return FieldMatrix(rows, cols, Scalar::zero(f));
}

FieldMatrix identity(Field f, std::size_t n) {
  return FieldMatrix::identity(n, Scalar::zero(f), Scalar::one(f));
}

FieldMatrix from_integers(Field f, const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m = zeros(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Field field_of(const FieldMatrix& m, Field fallback) {
  return m.empty() ? fallback : m(0, 0).field();
}

Echelon row_reduce(FieldMatrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(row, piv);
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const FieldMatrix& m) {
  // Forward elimination only; cheaper than full reduction.
  FieldMatrix a = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(row, piv);
    const Scalar inv = a(row, col).inverse();
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      if (a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col) * inv;
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
    }
    ++row;
  }
  return row;
}

FieldMatrix kernel_basis(const FieldMatrix& m, Field f) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  FieldMatrix k = zeros(f, m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = Scalar::one(f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      k(e.pivots[r], j) = -e.reduced(r, free[j]);
  }
  return k;
}

Scalar determinant(const FieldMatrix& m, Field f) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  FieldMatrix a = m;
  Scalar det = Scalar::one(f);
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(f);
    if (piv != col) {
      a.swap_rows(piv, col);
      det = -det;
    }
    det *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

FieldMatrix inverse(const FieldMatrix& m, Field f) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Echelon e = row_reduce(hconcat(m, identity(f, n), Scalar::zero(f)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw Error("matrix is singular");
  FieldMatrix inv = zeros(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::optional<FieldMatrix> solve(const FieldMatrix& a, const FieldMatrix& b,
                                 Field f) {
  if (a.rows() != b.rows()) throw Error("solve: row mismatch");
  const std::size_t n = a.cols();
  const Echelon e = row_reduce(hconcat(a, b, Scalar::zero(f)));
  for (auto p : e.pivots)
    if (p >= n) return std::nullopt;
  FieldMatrix x = zeros(f, n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      x(e.pivots[r], c) = e.reduced(r, n + c);
  return x;
}

FieldMatrix add(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("matrix sum dimension mismatch");
  FieldMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

FieldMatrix scale(const FieldMatrix& a, const Scalar& s) {
  FieldMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
  return out;
}

} // namespace scx::algebra
