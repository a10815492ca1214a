#pragma once

#include "scx/algebra/laurent.hpp"
#include "scx/algebra/linalg.hpp"
#include "scx/chain/complex.hpp"
#include "scx/error.hpp"
#include "scx/grp/representation.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace scx::chain {

using algebra::Field;
using algebra::FieldMatrix;
using algebra::LaurentPoly;
using algebra::Matrix;
using grp::Representation;

/// Boundary matrices d[i] : C_i -> C_{i-1} (column convention), i = 1..3,
/// with k-blocks per cell; cells[i] lists the cells of dimension i that
/// survive in the relative complex, in order.
template <class T>
struct BlockComplex {
  std::size_t k = 1;
  std::array<std::vector<std::size_t>, 4> cells;
  std::array<Matrix<T>, 4> d; // d[0] unused (0 x n0)

  std::size_t rank_of(int i) const { return cells[i].size() * k; }
};

using TwistedComplex = BlockComplex<algebra::Scalar>;
using LaurentComplex = BlockComplex<LaurentPoly>;

/// Assembles the relative complex (cells of y removed) from per-word k x k
/// blocks, then verifies d[i-1] * d[i] = 0 (BoundaryError otherwise).
template <class T>
BlockComplex<T> assemble(const EquivariantComplex& cx, const SubcomplexRef* y, std::size_t k,
                         const T& zero, const std::function<T(long)>& integer,
                         const std::function<Matrix<T>(const Word&)>& block) {
  BlockComplex<T> out;
  out.k = k;
  std::vector<std::size_t> pos(cx.size(), 0);
  for (int d = 0; d <= 3; ++d)
    for (auto c : cx.cells_of_dim(d))
      if (!y || !y->contains(c)) {
        pos[c] = out.cells[d].size();
        out.cells[d].push_back(c);
      }
  out.d[0] = Matrix<T>(0, out.rank_of(0), zero);
  for (int d = 1; d <= 3; ++d) {
    Matrix<T> m(out.rank_of(d - 1), out.rank_of(d), zero);
    for (std::size_t j = 0; j < out.cells[d].size(); ++j)
      for (const auto& t : cx.cell(out.cells[d][j]).boundary) {
        if (y && y->contains(t.cell)) continue;
        if (t.coeff == 0) continue;
        const Matrix<T> b = block(t.word);
        m.add_block(pos[t.cell] * k, j * k, b, integer(t.coeff));
      }
    out.d[d] = std::move(m);
  }
  for (int d = 2; d <= 3; ++d)
    if (!out.d[d - 1].multiply(out.d[d], zero).is_zero())
      throw BoundaryError("boundary does not square to zero in degree " + std::to_string(d) +
                          " under the given representation");
  return out;
}

/// Relative twisted complex C(X, Y) (x) F^k; y may be null.
TwistedComplex specialize(const EquivariantComplex& cx, const SubcomplexRef* y,
                          const Representation& rep);
/// Same with coefficients F[t^{+-1}] via g -> t^{phi(g)} rep(g).
LaurentComplex specialize_laurent(const EquivariantComplex& cx, const SubcomplexRef* y,
                                  const Representation& rep, const std::vector<long>& phi);

struct BettiVector {
  std::array<std::size_t, 4> b{};
  Field field;
  std::size_t k = 1;

  long alternating_sum() const {
    return static_cast<long>(b[0]) - static_cast<long>(b[1]) + static_cast<long>(b[2]) -
           static_cast<long>(b[3]);
  }
  std::string str() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Ranks of d[1..3] (index 0 is 0).
std::array<std::size_t, 5> boundary_ranks(const TwistedComplex& tc);
BettiVector betti(const TwistedComplex& tc, Field f);
/// Convenience: specialize then betti.
BettiVector betti(const EquivariantComplex& cx, const SubcomplexRef* y, const Representation& rep);

struct EulerReport {
  long alternating = 0;
  long expected = 0; // k * chi(X, Y)
  bool pass = false;
};
EulerReport euler_check(const EquivariantComplex& cx, const SubcomplexRef* y,
                        const Representation& rep);

struct VanishingReport {
  std::size_t b0 = 0;
  std::size_t b3 = 0;
  bool b3_checked = false;
  bool pass = false;
  std::string message;
};
/// b0(X, Y) = 0 for connected X and nonempty Y; with `three_manifold`, also
/// b3 = 0 (Y a proper nonempty part of the boundary).
VanishingReport h0_vanishing_check(const EquivariantComplex& cx, const SubcomplexRef& y,
                                   const Representation& rep, bool three_manifold);

struct DualityReport {
  std::array<std::size_t, 4> lhs{}; // b_{3-i}(X, Y1; rep)
  std::array<std::size_t, 4> rhs{}; // b_i(X, Y2; dagger rep)
  bool pass = false;
};
DualityReport duality_check(const EquivariantComplex& cx, const SubcomplexRef& y1,
                            const SubcomplexRef& y2, const Representation& rep);

struct LesReport {
  BettiVector sub, whole, pair;
  // rank of H_i(Y)->H_i(X), H_i(X)->H_i(X,Y), H_i(X,Y)->H_{i-1}(Y)
  std::array<std::size_t, 4> inclusion{}, projection{}, connecting{};
  long alternating = 0;
  bool exact = false;
};
LesReport les_check(const EquivariantComplex& cx, const SubcomplexRef& y,
                    const Representation& rep);

} // namespace scx::chain
