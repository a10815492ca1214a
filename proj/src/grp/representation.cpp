#include "scx/grp/representation.hpp"

#include "scx/error.hpp"

#include <algorithm>
#include <sstream>

namespace scx::grp {

using algebra::Scalar;

std::string to_string(Provenance p) {
  switch (p) {
  case Provenance::Trivial: return "trivial";
  case Provenance::Permutation: return "permutation";
  case Provenance::ReducedPermutation: return "reduced permutation";
  case Provenance::Regular: return "regular";
  case Provenance::User: return "user";
  }
  return "?";
}

Representation Representation::trivial(const GroupPresentation& pres, std::size_t k, Field f) {
  if (k == 0) throw InputError("representation dimension must be positive");
  std::vector<Permutation> perms(pres.generator_count(), Permutation::identity(k));
  Representation r = from_permutations(pres, std::move(perms), f, Provenance::Trivial);
  return r;
}

FieldMatrix permutation_matrix(const Permutation& p, Field f) {
  FieldMatrix m = algebra::zeros(f, p.degree(), p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) m(p(i), i) = Scalar::one(f);
  return m;
}

Representation Representation::from_permutations(const GroupPresentation& pres,
                                                 std::vector<Permutation> images, Field f,
                                                 Provenance prov) {
  if (images.size() != pres.generator_count())
    throw InputError("expected " + std::to_string(pres.generator_count()) +
                     " generator images, got " + std::to_string(images.size()));
  const std::size_t n = images.empty() ? 1 : images.front().degree();
  if (!check_hom(pres, images)) throw InputError("permutation images violate a relator");
  Representation r;
  r.k_ = n;
  r.field_ = f;
  for (const auto& p : images) {
    r.mats_.push_back(permutation_matrix(p, f));
    r.inv_.push_back(permutation_matrix(p.inverse(), f));
  }
  r.perms_ = std::move(images);
  r.prov_ = prov;
  r.unitary_ = true;
  return r;
}

Representation Representation::from_matrices(const GroupPresentation& pres,
                                             std::vector<FieldMatrix> images, Field f,
                                             bool unitary) {
  if (images.size() != pres.generator_count())
    throw InputError("expected " + std::to_string(pres.generator_count()) +
                     " generator matrices, got " + std::to_string(images.size()));
  Representation r;
  r.k_ = images.empty() ? 1 : images.front().rows();
  if (r.k_ == 0) throw InputError("representation dimension must be positive");
  r.field_ = f;
  for (auto& m : images) {
    if (m.rows() != r.k_ || m.cols() != r.k_) throw InputError("generator matrix has wrong size");
    for (std::size_t i = 0; i < r.k_; ++i)
      for (std::size_t j = 0; j < r.k_; ++j)
        if (!(m(i, j).field() == f)) throw InputError("generator matrix over the wrong field");
    if (algebra::determinant(m, f).is_zero()) throw InputError("generator matrix is singular");
    r.inv_.push_back(algebra::inverse(m, f));
    r.mats_.push_back(std::move(m));
  }
  r.prov_ = Provenance::User;
  r.unitary_ = unitary;
  if (!check_hom(pres, r)) throw InputError("generator matrices violate a relator");
  return r;
}

FieldMatrix Representation::eval(const Word& w) const {
  for (const auto& l : w.letters())
    if (l.gen >= mats_.size()) throw InputError("word uses an unknown generator");
  if (perms_) return permutation_matrix(evaluate(w, *perms_, k_), field_);
  FieldMatrix out = algebra::identity(field_, k_);
  for (const auto& l : w.letters())
    out = out.multiply(l.exp > 0 ? mats_[l.gen] : inv_[l.gen], Scalar::zero(field_));
  return out;
}

std::string Representation::describe(const GroupPresentation& pres) const {
  std::ostringstream os;
  if (prov_ == Provenance::Trivial) {
    os << "trivial representation of dimension " << k_;
  } else if (perms_) {
    os << to_string(prov_) << " representation of degree " << k_;
    if (prov_ == Provenance::Permutation)
      for (std::size_t i = 0; i < perms_->size(); ++i)
        os << (i ? ", " : ": ") << pres.generators()[i] << "=" << (*perms_)[i].str();
  } else if (prov_ == Provenance::ReducedPermutation) {
    os << "reduced permutation representation of dimension " << k_;
    for (std::size_t i = 0; i < perms_src_.size(); ++i)
      os << (i ? ", " : ": ") << pres.generators()[i] << "=" << perms_src_[i].str();
  } else {
    os << "user representation of dimension " << k_ << (unitary_ ? " (asserted unitary)" : "");
  }
  os << " over " << field_.name();
  return os.str();
}

FieldMatrix eval_word(const Representation& rep, const Word& w) { return rep.eval(w); }

bool check_hom(const GroupPresentation& pres, const Representation& rep) {
  if (rep.generator_count() != pres.generator_count())
    throw InputError("representation arity mismatch");
  const FieldMatrix id = algebra::identity(rep.field(), rep.dim());
  for (const auto& r : pres.relators())
    if (!(rep.eval(r) == id)) return false;
  return true;
}

Representation permutation_representation(const GroupPresentation& pres,
                                          const FiniteQuotient& q, Field f) {
  return Representation::from_permutations(pres, q.images, f, Provenance::Permutation);
}

Representation reduced_permutation_representation(const GroupPresentation& pres,
                                                  const FiniteQuotient& q, Field f) {
  const std::size_t n = q.degree;
  if (n < 2) throw InputError("reduced permutation representation needs degree >= 2");
  // Basis f_i = e_i - e_n; s(f_i) = f_{s(i)} - f_{s(n)} with f_n = 0.
  std::vector<FieldMatrix> mats;
  for (const auto& s : q.images) {
    FieldMatrix m = algebra::zeros(f, n - 1, n - 1);
    const std::size_t last = s(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (s(i) != n - 1) m(s(i), i) += Scalar(f, 1);
      if (last != n - 1) m(last, i) -= Scalar(f, 1);
    }
    mats.push_back(std::move(m));
  }
  Representation r = Representation::from_matrices(pres, std::move(mats), f, true);
  r.prov_ = Provenance::ReducedPermutation;
  r.perms_src_ = q.images;
  return r;
}

Representation regular_representation(const GroupPresentation& pres, const FiniteQuotient& q,
                                       Field f, std::size_t cap) {
  std::vector<Permutation> elems;
  try {
    elems = closure(q.images, q.degree, cap);
  } catch (const SizeLimitError&) {
    throw SizeLimitError("regular representation dimension exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = elems.size();
  if (n > 255) throw SizeLimitError("regular representation dimension exceeds 255");
  std::vector<Permutation> images;
  for (const auto& g : q.images) {
    std::vector<std::uint8_t> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto it = std::lower_bound(elems.begin(), elems.end(), g * elems[i]);
      img[i] = static_cast<std::uint8_t>(it - elems.begin());
    }
    images.emplace_back(std::move(img));
  }
  return Representation::from_permutations(pres, std::move(images), f, Provenance::Regular);
}

Representation dagger(const Representation& rep) {
  Representation d = rep;
  for (std::size_t i = 0; i < rep.mats_.size(); ++i) {
    d.mats_[i] = rep.inv_[i].transpose();
    d.inv_[i] = rep.mats_[i].transpose();
  }
  if (rep.perms_) {
    // (P^{-1})^T = P for permutation matrices
    d.perms_ = rep.perms_;
  }
  return d;
}

} // namespace scx::grp
