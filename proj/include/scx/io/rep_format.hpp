#pragma once

#include "scx/grp/representation.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace scx::io {

/// Representation description, resolved against a presentation on demand.
struct RepDocument {
  enum class Kind { Trivial, Perm, Matrix } kind = Kind::Trivial;
  std::size_t dim = 1;                              // trivial k, perm degree, matrix k
  std::map<std::string, std::string> perm_images;   // gen -> cycle notation
  std::string matrix_field = "q";
  std::map<std::string, std::vector<std::vector<std::string>>> matrix_images;
  bool unitary = false;

  /// Generators missing from perm/matrix documents map to the identity.
  /// `field` applies to trivial and perm kinds; matrix documents carry theirs.
  grp::Representation resolve(const grp::GroupPresentation& pres,
                              algebra::Field field = algebra::Field::rationals()) const;
};

/// File form:
///   rep 1
///   trivial 2            | perm 3 + "x = (1 2)" lines | matrix q 2 + "x = 1 1 ; 0 1"
///   unitary 1            (matrix documents only)
RepDocument parse_rep(const std::string& text);
/// Inline forms "trivial:k", "perm:x=(1 2),y=(2 3)", "perm:4:x=(1 2 3 4)";
/// anything else is read as a file path.
RepDocument parse_rep_spec(const std::string& spec);

} // namespace scx::io
