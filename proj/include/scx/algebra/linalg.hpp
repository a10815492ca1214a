#pragma once

#include "scx/algebra/field.hpp"
#include "scx/algebra/matrix.hpp"

#include <optional>
#include <vector>

namespace scx::algebra {

using FieldMatrix = Matrix<Scalar>;

FieldMatrix zeros(Field f, std::size_t rows, std::size_t cols);
FieldMatrix identity(Field f, std::size_t n);
FieldMatrix from_integers(Field f, const std::vector<std::vector<long>>& rows);
/// Field of the entries; `fallback` for an empty matrix.
Field field_of(const FieldMatrix& m, Field fallback = Field::rationals());

struct Echelon {
  FieldMatrix reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; deterministic (first nonzero pivot per column).
Echelon row_reduce(FieldMatrix m);

std::size_t rank(const FieldMatrix& m);

/// Columns form the canonical basis of the null space read off the reduced
/// row echelon form: one vector per free column, in column order.
FieldMatrix kernel_basis(const FieldMatrix& m, Field f);

Scalar determinant(const FieldMatrix& m, Field f);
FieldMatrix inverse(const FieldMatrix& m, Field f);

/// Solves a * x = b (b may have several columns); nullopt if inconsistent.
std::optional<FieldMatrix> solve(const FieldMatrix& a, const FieldMatrix& b,
                                 Field f);

FieldMatrix add(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix scale(const FieldMatrix& a, const Scalar& s);

} // namespace scx::algebra
