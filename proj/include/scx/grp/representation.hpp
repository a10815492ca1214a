#pragma once

#include "scx/algebra/linalg.hpp"
#include "scx/grp/group.hpp"
#include "scx/grp/quotient.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scx::grp {

using algebra::Field;
using algebra::FieldMatrix;

enum class Provenance { Trivial, Permutation, ReducedPermutation, Regular, User };
std::string to_string(Provenance p);

/// alpha : pi -> GL(k, F), given on generators. Permutation-backed
/// representations keep their permutations for fast word evaluation.
class Representation {
public:
  static Representation trivial(const GroupPresentation& pres, std::size_t k, Field f);
  static Representation from_permutations(const GroupPresentation& pres,
                                          std::vector<Permutation> images, Field f,
                                          Provenance prov = Provenance::Permutation);
  /// User matrices; verified invertible and checked against the relators.
  static Representation from_matrices(const GroupPresentation& pres,
                                      std::vector<FieldMatrix> images, Field f,
                                      bool unitary);

  std::size_t dim() const { return k_; }
  Field field() const { return field_; }
  std::size_t generator_count() const { return mats_.size(); }
  Provenance provenance() const { return prov_; }
  bool unitary() const { return unitary_; }
  const FieldMatrix& image(std::size_t gen) const { return mats_.at(gen); }
  const FieldMatrix& inverse_image(std::size_t gen) const { return inv_.at(gen); }
  const std::optional<std::vector<Permutation>>& permutations() const { return perms_; }

  /// Product of generator matrices in word order; identity for the empty word.
  FieldMatrix eval(const Word& w) const;
  /// Short human-readable description.
  std::string describe(const GroupPresentation& pres) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.k_ == b.k_ && a.field_ == b.field_ && a.mats_ == b.mats_;
  }

private:
  Representation() = default;
  std::size_t k_ = 0;
  Field field_;
  std::vector<FieldMatrix> mats_;
  std::vector<FieldMatrix> inv_;
  std::optional<std::vector<Permutation>> perms_;
  std::vector<Permutation> perms_src_; // for reduced permutation representations
  Provenance prov_ = Provenance::User;
  bool unitary_ = false;

  friend Representation dagger(const Representation& rep);
  friend Representation reduced_permutation_representation(const GroupPresentation&,
                                                           const FiniteQuotient&, Field);
};

FieldMatrix eval_word(const Representation& rep, const Word& w);
/// True iff every relator evaluates to the identity matrix.
bool check_hom(const GroupPresentation& pres, const Representation& rep);

/// Permutation matrices of the quotient's images: P(s) e_i = e_{s(i)}.
FieldMatrix permutation_matrix(const Permutation& p, Field f);
Representation permutation_representation(const GroupPresentation& pres,
                                          const FiniteQuotient& q,
                                          Field f = Field::rationals());
/// The permutation representation minus its trivial summand: action on the
/// span of e_i - e_n, degree n - 1 (n >= 2). Unitarizable like its parent.
Representation reduced_permutation_representation(const GroupPresentation& pres,
                                                  const FiniteQuotient& q,
                                                  Field f = Field::rationals());
/// Left multiplication of the image group on itself, elements listed in
/// ascending (lexicographic) order. Throws SizeLimitError above `cap`.
Representation regular_representation(const GroupPresentation& pres,
                                       const FiniteQuotient& q,
                                       Field f = Field::rationals(), std::size_t cap = 64);
/// g -> (rep(g)^{-1})^T.
Representation dagger(const Representation& rep);

} // namespace scx::grp
