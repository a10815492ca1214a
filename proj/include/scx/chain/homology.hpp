#pragma once

#include "scx/chain/twisted.hpp"

#include <gmpxx.h>

#include <map>

namespace scx::chain {

/// Canonical basis of H_i = Z_i / B_i: echelon kernel vectors of d_i, kept
/// greedily when independent of B_i and the vectors already chosen.
struct HomologyBasis {
  FieldMatrix cycles;     // columns: chosen representatives
  FieldMatrix boundaries; // columns spanning B_i
};
HomologyBasis homology_basis(const TwistedComplex& tc, int i, Field f);
/// Coordinates of the cycles in `z` (columns) with respect to the basis.
/// Throws Error if a column is not a cycle combination.
FieldMatrix homology_coordinates(const HomologyBasis& h, const FieldMatrix& z, Field f);

/// Cell-level chain map A -> B: for each cell of A the chain (terms over B's
/// cells, words in B's group) it is sent to.
struct ChainMap {
  std::vector<std::vector<BoundaryTerm>> images;
};
ChainMap inclusion_map(const EquivariantComplex& sub, const EquivariantComplex& whole);

struct MapSide {
  const EquivariantComplex* cx = nullptr;
  const SubcomplexRef* rel = nullptr;
  const Representation* rep = nullptr;
};

/// Matrix of H_i(A) -> H_i(B) in the canonical bases. Verifies the chain-map
/// identity under the representations (Error otherwise).
FieldMatrix induced_map(const MapSide& a, const MapSide& b, const ChainMap& f, int degree);

/// Untwisted integral homology of (X, Y).
struct IntegralHomology {
  std::array<std::size_t, 4> free_rank{};
  std::array<std::vector<mpz_class>, 4> torsion; // invariant factors > 1
  std::array<std::vector<mpz_class>, 4> snf_in;  // SNF diagonal of d_{i+1}
  std::string str(int i) const;
};
IntegralHomology integral_homology(const EquivariantComplex& cx, const SubcomplexRef* y);

/// Free abelianization pi -> Z^r as integer vectors per generator
/// (a basis of the rational kernel of the relator exponent matrix, cleared
/// of denominators).
std::vector<std::vector<long>> abelianization_map(const GroupPresentation& g);
/// b1 of the group's abelianization over Q.
std::size_t abelian_rank(const GroupPresentation& g);

/// Checks d^2 = 0 over Z[Z^r] under the free abelianization; returns the
/// offending degree or 0 if the check passes.
int abelian_boundary_check(const EquivariantComplex& cx);

} // namespace scx::chain
