#pragma once

#include "scx/algebra/laurent.hpp"
#include "scx/algebra/matrix.hpp"

namespace scx::algebra {

using PolyMatrix = Matrix<LaurentPoly>;

PolyMatrix poly_zeros(Field f, std::size_t rows, std::size_t cols);

/// Order of the F[t^{+-1}]-module ker(d_out) / im(d_in).
///
/// d_in : C_{i+1} -> C_i and d_out : C_i -> C_{i-1} in column convention
/// (d_in has C_i rows, d_out has C_i columns). Returns 0 when the module has
/// positive rank, otherwise the product of the elementary divisors of im(d_in)
/// inside the free module ker(d_out), canonicalized (lowest exponent 0, monic).
/// Throws if d_out * d_in != 0.
LaurentPoly pid_homology_order(const PolyMatrix& d_in, const PolyMatrix& d_out,
                               Field f);

/// Determinant over F[t^{+-1}] by fraction-free (Bareiss) elimination.
LaurentPoly det_poly(const PolyMatrix& m, Field f);

} // namespace scx::algebra
