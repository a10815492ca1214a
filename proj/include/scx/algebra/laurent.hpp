#pragma once

#include "scx/algebra/field.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scx::algebra {

/// Univariate Laurent polynomial sum_{i=r}^{s} a_i t^i over a Field.
///
/// Canonical storage: `coeffs_` holds a_r..a_s with a_r != 0 and a_s != 0;
/// the zero polynomial has no coefficients and lowest exponent 0.
class LaurentPoly {
public:
  explicit LaurentPoly(Field f = Field::rationals()) : field_(f) {}
  LaurentPoly(Field f, int lowest, std::vector<Scalar> coeffs);

  static LaurentPoly constant(const Scalar& c);
  static LaurentPoly constant(Field f, long c) { return constant(Scalar(f, c)); }
  /// c * t^n
  static LaurentPoly monomial(const Scalar& c, int n);
  /// Coefficients listed from t^0 upward.
  static LaurentPoly from_ints(Field f, std::vector<long> ascending, int lowest = 0);

  Field field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Nonzero monomial c * t^n.
  bool is_unit() const { return coeffs_.size() == 1; }
  int lowest() const { return low_; }
  /// Highest exponent; only meaningful for nonzero polynomials.
  int highest() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// deg = s - r; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  Scalar coeff(int exponent) const;
  const Scalar& leading() const { return coeffs_.back(); }
  const Scalar& trailing() const { return coeffs_.front(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Scalar& s, const LaurentPoly& p);
  friend LaurentPoly operator*(long s, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.field_ == b.field_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by t^n.
  LaurentPoly shifted(int n) const;
  /// Associate with lowest exponent 0 and leading coefficient 1 (zero stays zero).
  LaurentPoly canonical() const;
  /// True if a and b differ by a unit c * t^n.
  static bool associated(const LaurentPoly& a, const LaurentPoly& b);

  /// Division with remainder in F[t]; both operands must have lowest() >= 0.
  /// The remainder has smaller top degree than the divisor.
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a,
                                                    const LaurentPoly& b);
  /// Exact division in F[t^{+-1}]; throws if b does not divide a.
  static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

  /// Ascending sparse form, e.g. "1 - t + t^2", "-1/2*t^-1 + 3*t".
  std::string str() const;
  static LaurentPoly parse(Field f, const std::string& text);

private:
  void normalize();

  Field field_;
  int low_ = 0;
  std::vector<Scalar> coeffs_;
};

} // namespace scx::algebra
