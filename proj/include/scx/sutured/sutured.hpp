#pragma once

#include "scx/chain/homology.hpp"
#include "scx/chain/twisted.hpp"
#include "scx/grp/quotient.hpp"
#include "scx/io/scx_format.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace scx::sutured {

using chain::EquivariantComplex;
using chain::SubcomplexRef;
using grp::GroupPresentation;
using grp::Representation;

/// Integer value per generator; a cocycle when every relator has weighted
/// exponent sum zero.
struct CohomologyClass {
  std::vector<long> values;

  long eval(const grp::Word& w) const;
  bool is_cocycle(const GroupPresentation& g) const;
  /// "x=1 y=0 ..." (zeros omitted unless everything is zero).
  std::string str(const GroupPresentation& g) const;
  /// Parses "x=1 y=1" or "x=1,y=1"; unmentioned generators are 0.
  static CohomologyClass parse(const std::string& text, const GroupPresentation& g);
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

struct SuturedComplex {
  EquivariantComplex m;
  SubcomplexRef rminus, rplus, gamma;
  long sutures = 1;
  long chi_rminus = 0, chi_rplus = 0;
  bool s1xd2 = false, d3 = false, irreducible = false, manifold = false;

  bool balanced() const { return chi_rminus == chi_rplus; }
  /// Uses subcomplexes R-, R+, gamma (gamma optional) and metadata keys
  /// sutures, irreducible, s1xd2, d3, manifold, chi_rminus, chi_rplus.
  /// Missing chi values are taken from the cells.
  static SuturedComplex from_document(const io::ScxDocument& doc);
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool balanced = false;
  std::size_t disk_components = 0;
  bool ok() const { return errors.empty(); }
};
ValidationReport validate(const SuturedComplex& sc);

/// Sum over components of max(-chi, 0).
long chi_minus(const EquivariantComplex& cx, const SubcomplexRef& s);

enum class Status {
  CertifiedTaut,
  CertifiedNotTaut,
  CertifiedNotProduct,
  CertifiedNotFiberedAnalog,
  Unknown,
  Refused
};
std::string to_string(Status s);
/// 0 certified (positive outcome), 1 refusal/negative, 2 unknown.
int exit_code(Status s);

struct Witness {
  std::string test; // "trivial", "permutation", "index", "regular", "untwisted"
  std::optional<grp::FiniteQuotient> quotient;
  std::string representation;
  std::optional<chain::BettiVector> betti;      // of (M, R-)
  std::optional<chain::BettiVector> betti_plus; // of (M, R+)
  std::size_t image_order = 0;  // |im pi1(M) -> G|
  std::size_t rminus_order = 0; // |im pi1(R-) -> G|
  std::string detail;
};

struct Verdict {
  Status status = Status::Unknown;
  std::optional<Witness> witness;
  std::string reason;
  std::vector<std::string> assumptions;
  std::size_t degrees_exhausted = 0;
  std::size_t representations_tested = 0;
  std::vector<std::string> log;
};

struct SearchOptions {
  std::size_t max_degree = 4;
  unsigned threads = 1;
  std::size_t regular_cap = 64;
};

Verdict certify_taut(const SuturedComplex& sc, const SearchOptions& opts);
Verdict nonproduct_search(const SuturedComplex& sc, const SearchOptions& opts);

/// Words generating the image of pi1 of the component of `s` that contains
/// its first vertex, based at that vertex.
std::vector<grp::Word> loop_words(const EquivariantComplex& cx, const SubcomplexRef& s);

struct ComplexityBound {
  mpq_class bound;           // lower bound for x(M, gamma), clamped at 0
  long chi_minus_rminus = 0;
  long chi_minus_rplus = 0;
  std::size_t b1_rminus = 0; // b1(M, R-)
  std::size_t b1_rplus = 0;  // b1(M, R+)
  std::size_t k = 1;
  bool sharp = false;
};
/// Throws InputError when the preconditions fail.
ComplexityBound complexity_lower_bound(const SuturedComplex& sc, const Representation& rep);

struct DoubleResult {
  io::ScxDocument document; // DM with subcomplexes R- and R+ and metadata
  CohomologyClass phi;
  /// Image in M's group of every generator of DM's group.
  std::vector<grp::Word> retraction;
  std::vector<std::string> stable_letters;
};
DoubleResult double_complex(const SuturedComplex& sc);

} // namespace scx::sutured
