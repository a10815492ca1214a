#pragma once

#include "scx/algebra/pid.hpp"
#include "scx/chain/homology.hpp"
#include "scx/io/scx_format.hpp"
#include "scx/sutured/sutured.hpp"

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>

namespace scx::alex {

using algebra::LaurentPoly;
using chain::EquivariantComplex;
using grp::Representation;
using sutured::CohomologyClass;

/// Order of H_i with F[t^{+-1}] coefficients; deg is undefined for 0.
struct AlexOrder {
  int i = 0;
  LaurentPoly poly;
  std::optional<int> deg;
  /// "Delta_1 = 1 - t + t^2"
  std::string str() const;
};

/// Twisted by g -> t^{phi(g)} rep(g). Throws InputError if phi is not a
/// cocycle, BoundaryError if the specialization fails d^2 = 0.
AlexOrder twisted_alexander(const EquivariantComplex& cx, const CohomologyClass& phi,
                            const Representation& rep, int i);

struct ThurstonBound {
  std::array<AlexOrder, 3> orders;
  std::size_t k = 1;
  std::optional<mpq_class> bound; // empty when some Delta_i = 0
  bool floored = false;
  std::string note;
};
/// (deg Delta_1 - deg Delta_0 - deg Delta_2) / k, floored at 0; a lower bound
/// for the Thurston norm of phi.
ThurstonBound thurston_bound(const EquivariantComplex& cx, const CohomologyClass& phi,
                             const Representation& rep);

/// A complex W cut along a surface R into X: two chain maps R -> X.
struct CutData {
  EquivariantComplex r;
  EquivariantComplex x;
  chain::ChainMap left, right;
  /// Group homomorphisms pi(R) -> pi(X) underlying the chain maps.
  std::vector<grp::Word> left_hom, right_hom;
};

/// For a mapping-torus document (metadata `phi` with a single stable letter of
/// value 1 and `monodromy g=word ...` over the remaining generators): R is the
/// rose on the fiber generators, X = R x [0,1], the left map is the bottom
/// inclusion and the right map the top inclusion composed with the monodromy.
CutData fibered_cut(const io::ScxDocument& doc);

struct DetFormReport {
  int i = 0;
  std::size_t b_r = 0, b_x = 0;
  bool applicable = false;
  std::string reason;
  LaurentPoly det;
  AlexOrder alexander;
  bool match = false;
};
/// det(i_l - t i_r) on H_i(R) -> H_i(X), compared up to units with the
/// twisted Alexander order of W. `rep` is a representation of X's group and
/// must agree on R through both maps (checked on generators).
DetFormReport det_form_check(const CutData& cut, const EquivariantComplex& w,
                             const CohomologyClass& phi, const Representation& rep_x,
                             const Representation& rep_w, int i);

struct DetAbReport {
  std::size_t size = 0;
  std::optional<int> degree; // deg det(A + tB)
  bool det_a_nonzero = false;
  bool det_b_nonzero = false;
  bool lhs = false; // degree == size
  bool rhs = false; // both determinants nonzero
  bool holds() const { return lhs == rhs; }
};
DetAbReport detab_property(const algebra::FieldMatrix& a, const algebra::FieldMatrix& b,
                           algebra::Field f);

} // namespace scx::alex
