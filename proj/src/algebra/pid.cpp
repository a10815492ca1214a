#include "scx/algebra/pid.hpp"

#include "scx/algebra/smith.hpp"

#include <algorithm>

namespace scx::algebra {

namespace {

// Smallest shift making every entry an ordinary polynomial.
int clearing_shift(const PolyMatrix& m) {
  int low = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) low = std::min(low, m(r, c).lowest());
  return -low;
}

PolyMatrix shifted(const PolyMatrix& m, int n) {
  PolyMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).shifted(n);
  return out;
}

} // namespace

PolyMatrix poly_zeros(Field f, std::size_t rows, std::size_t cols) {
  return PolyMatrix(rows, cols, LaurentPoly(f));
}

LaurentPoly pid_homology_order(const PolyMatrix& d_in, const PolyMatrix& d_out,
                               Field f) {
  const std::size_t n = d_out.cols();
  if (d_in.rows() != n)
    throw Error("pid_homology_order: d_in rows must match d_out columns");
  if (!d_out.multiply(d_in, LaurentPoly(f)).is_zero())
    throw BoundaryError("pid_homology_order: d_out * d_in is not zero");

  const PolynomialRing ring{f};
  const PolyMatrix out_poly = shifted(d_out, clearing_shift(d_out));
  const PolyMatrix in_poly = shifted(d_in, clearing_shift(d_in));

  const auto outer = smith_form(out_poly, ring);
  const std::size_t r = outer.rank;
  const std::size_t free_rank = n - r;
  if (free_rank == 0) return LaurentPoly::constant(f, 1);

  // Coordinates of im(d_in) in the basis of ker(d_out) given by columns r.. of Q.
  const PolyMatrix coords = outer.q_inverse.multiply(in_poly, LaurentPoly(f));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < coords.cols(); ++c)
      if (!coords(i, c).is_zero())
        throw BoundaryError("pid_homology_order: image leaves the kernel");
  PolyMatrix k = poly_zeros(f, free_rank, coords.cols());
  for (std::size_t i = 0; i < free_rank; ++i)
    for (std::size_t c = 0; c < coords.cols(); ++c) k(i, c) = coords(r + i, c);

  const auto inner = smith_form(k, ring);
  if (inner.rank < free_rank) return LaurentPoly(f);
  LaurentPoly order = LaurentPoly::constant(f, 1);
  for (std::size_t i = 0; i < free_rank; ++i) order *= inner.diagonal[i];
  return order.canonical();
}

LaurentPoly det_poly(const PolyMatrix& m, Field f) {
  if (m.rows() != m.cols()) throw Error("det_poly: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(f, 1);
  const int shift = clearing_shift(m);
  PolyMatrix a = shifted(m, shift);
  LaurentPoly prev = LaurentPoly::constant(f, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return LaurentPoly(f);
      a.swap_rows(k, piv);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = LaurentPoly::exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  LaurentPoly det = a(n - 1, n - 1);
  if (negate) det = -det;
  return det.shifted(-shift * static_cast<int>(n));
}

} // namespace scx::algebra
