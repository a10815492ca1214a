#pragma once

#include "scx/algebra/laurent.hpp"
#include "scx/algebra/matrix.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace scx::algebra {

/// The integers as a Euclidean domain.
struct IntegerRing {
  using Value = mpz_class;
  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  /// Euclidean norm comparison: |a| < |b|.
  bool smaller(const Value& a, const Value& b) const { return abs(a) < abs(b); }
  std::pair<Value, Value> divmod(const Value& a, const Value& b) const {
    Value q = a / b; // truncating; |a - q b| < |b|
    return {q, a - q * b};
  }
  /// Unit u with u * v canonical (nonnegative).
  Value normalizer(const Value& v) const { return sgn(v) < 0 ? -1 : 1; }
};

/// F[t] as a Euclidean domain; values are LaurentPoly with lowest() >= 0.
struct PolynomialRing {
  using Value = LaurentPoly;
  Field field;
  Value zero() const { return LaurentPoly(field); }
  Value one() const { return LaurentPoly::constant(field, 1); }
  bool is_zero(const Value& v) const { return v.is_zero(); }
  bool smaller(const Value& a, const Value& b) const {
    return a.highest() < b.highest();
  }
  std::pair<Value, Value> divmod(const Value& a, const Value& b) const {
    return LaurentPoly::divmod(a, b);
  }
  Value normalizer(const Value& v) const {
    return LaurentPoly::constant(v.leading().inverse());
  }
};

/// P * A * Q = D with D diagonal, d_1 | d_2 | ... (nonzero entries first,
/// each normalized), P and Q invertible. `q_inverse` is Q^{-1}.
template <class Ring>
struct SmithForm {
  std::vector<typename Ring::Value> diagonal; // length min(rows, cols)
  std::size_t rank = 0;
  Matrix<typename Ring::Value> p;
  Matrix<typename Ring::Value> q;
  Matrix<typename Ring::Value> q_inverse;
};

template <class Ring>
SmithForm<Ring> smith_form(Matrix<typename Ring::Value> a, const Ring& ring) {
  using V = typename Ring::Value;
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm<Ring> out;
  out.p = Matrix<V>::identity(m, ring.zero(), ring.one());
  out.q = Matrix<V>::identity(n, ring.zero(), ring.one());
  out.q_inverse = Matrix<V>::identity(n, ring.zero(), ring.one());
  auto& P = out.p;
  auto& Q = out.q;
  auto& Qi = out.q_inverse;

  auto row_axpy = [&](std::size_t dst, std::size_t src, const V& f) {
    // row_dst -= f * row_src
    for (std::size_t c = 0; c < n; ++c)
      if (!ring.is_zero(a(src, c))) a(dst, c) -= f * a(src, c);
    for (std::size_t c = 0; c < m; ++c)
      if (!ring.is_zero(P(src, c))) P(dst, c) -= f * P(src, c);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const V& f) {
    // col_dst -= f * col_src
    for (std::size_t r = 0; r < m; ++r)
      if (!ring.is_zero(a(r, src))) a(r, dst) -= f * a(r, src);
    for (std::size_t r = 0; r < n; ++r)
      if (!ring.is_zero(Q(r, src))) Q(r, dst) -= f * Q(r, src);
    for (std::size_t c = 0; c < n; ++c)
      if (!ring.is_zero(Qi(dst, c))) Qi(src, c) += f * Qi(dst, c);
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    P.swap_rows(i, j);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    Q.swap_cols(i, j);
    Qi.swap_rows(i, j);
  };

  const std::size_t steps = std::min(m, n);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!ring.is_zero(a(i, j)) &&
            (!found || ring.smaller(a(i, j), a(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (ring.is_zero(a(i, t))) continue;
        auto [quo, rem] = ring.divmod(a(i, t), a(t, t));
        row_axpy(i, t, quo);
        if (!ring.is_zero(rem)) {
          swap_rows(i, t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (ring.is_zero(a(t, j))) continue;
        auto [quo, rem] = ring.divmod(a(t, j), a(t, t));
        col_axpy(j, t, quo);
        if (!ring.is_zero(rem)) {
          swap_cols(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (ring.is_zero(a(i, j))) continue;
          if (!ring.is_zero(ring.divmod(a(i, j), a(t, t)).second)) {
            row_axpy(t, i, -ring.one());
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    const V u = ring.normalizer(a(t, t));
    for (std::size_t c = 0; c < n; ++c) a(t, c) = u * a(t, c);
    for (std::size_t c = 0; c < m; ++c) P(t, c) = u * P(t, c);
  }
  out.rank = t;
  out.diagonal.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) out.diagonal.push_back(a(i, i));
  return out;
}

/// Smith normal form diagonal of an integer matrix (d_i >= 0, d_1 | d_2 | ...).
struct IntegerSmith {
  std::vector<mpz_class> diagonal;
  std::size_t rank = 0;
};
IntegerSmith snf_integers(const Matrix<mpz_class>& m);

} // namespace scx::algebra
