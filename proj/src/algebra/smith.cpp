#include "scx/algebra/smith.hpp"

namespace scx::algebra {

IntegerSmith snf_integers(const Matrix<mpz_class>& m) {
  const auto s = smith_form(m, IntegerRing{});
  return {s.diagonal, s.rank};
}

} // namespace scx::algebra
