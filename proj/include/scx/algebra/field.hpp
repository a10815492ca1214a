#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace scx::algebra {

/// Ground field tag: either the rationals or a prime field F_p (p < 2^31).
class Field {
public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);
  /// Parses "q", "Q", "f2", "f5", "F101", ...
  static Field parse(const std::string& text);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

private:
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An element of a Field. Rationals are kept canonical (lowest terms,
/// positive denominator); F_p elements are kept in [0, p).
class Scalar {
public:
  Scalar() : rep_(mpq_class(0)) {}
  Scalar(Field f, long value);
  Scalar(Field f, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; only valid over Q.
  const mpq_class& rational() const;
  /// Canonical residue; only valid over F_p.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string str() const;
  /// Parses an integer or "a/b" into field f.
  static Scalar parse(Field f, const std::string& text);

private:
  struct ModP {
    std::uint32_t v;
    std::uint32_t p;
  };
  explicit Scalar(ModP m) : rep_(m) {}
  void require_same(const Scalar& o) const;

  std::variant<mpq_class, ModP> rep_;
};

} // namespace scx::algebra
