#include "scx/algebra/field.hpp"

#include "scx/error.hpp"

#include <cctype>

namespace scx::algebra {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

} // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InputError("field characteristic must be a prime below 2^31: " +
                     std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    for (std::size_t i = 1; i < text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("unknown field: " + text);
    return prime(static_cast<std::uint32_t>(std::stoul(text.substr(1))));
  }
  throw InputError("unknown field: " + text);
}

std::string Field::name() const {
  return is_rational() ? std::string("q") : "f" + std::to_string(p_);
}

Scalar::Scalar(Field f, long value) {
  if (f.is_rational())
    rep_ = mpq_class(value);
  else
    rep_ = ModP{reduce(value, f.characteristic()), f.characteristic()};
}

Scalar::Scalar(Field f, const mpq_class& value) {
  if (f.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    rep_ = std::move(q);
    return;
  }
  const auto p = f.characteristic();
  const auto den = reduce(value.get_den(), p);
  if (den == 0)
    throw InputError("denominator divisible by the characteristic: " +
                     value.get_str());
  const auto num = reduce(value.get_num(), p);
  rep_ = ModP{static_cast<std::uint32_t>(std::uint64_t(num) *
                                         pow_mod(den, p - 2, p) % p),
              p};
}

Field Scalar::field() const {
  if (auto* m = std::get_if<ModP>(&rep_)) return Field::prime(m->p);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto* m = std::get_if<ModP>(&rep_)) return m->v == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* m = std::get_if<ModP>(&rep_)) return m->v == 1;
  return std::get<mpq_class>(rep_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  throw Error("rational() on a prime-field scalar");
}

std::uint32_t Scalar::residue() const {
  if (auto* m = std::get_if<ModP>(&rep_)) return m->v;
  throw Error("residue() on a rational scalar");
}

void Scalar::require_same(const Scalar& o) const {
  const auto* a = std::get_if<ModP>(&rep_);
  const auto* b = std::get_if<ModP>(&o.rep_);
  if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p))
    throw Error("scalar field mismatch");
}

Scalar Scalar::operator-() const {
  if (auto* m = std::get_if<ModP>(&rep_))
    return Scalar(ModP{m->v == 0 ? 0 : m->p - m->v, m->p});
  Scalar r;
  r.rep_ = mpq_class(-std::get<mpq_class>(rep_));
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (auto* m = std::get_if<ModP>(&rep_)) {
    std::uint64_t s = std::uint64_t(m->v) + std::get<ModP>(o.rep_).v;
    m->v = static_cast<std::uint32_t>(s % m->p);
  } else {
    std::get<mpq_class>(rep_) += std::get<mpq_class>(o.rep_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (auto* m = std::get_if<ModP>(&rep_)) {
    m->v = static_cast<std::uint32_t>(std::uint64_t(m->v) *
                                      std::get<ModP>(o.rep_).v % m->p);
  } else {
    std::get<mpq_class>(rep_) *= std::get<mpq_class>(o.rep_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (auto* m = std::get_if<ModP>(&rep_))
    return Scalar(ModP{pow_mod(m->v, m->p - 2, m->p), m->p});
  Scalar r;
  r.rep_ = mpq_class(1 / std::get<mpq_class>(rep_));
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* x = std::get_if<Scalar::ModP>(&a.rep_);
  const auto* y = std::get_if<Scalar::ModP>(&b.rep_);
  if (x && y) return x->p == y->p && x->v == y->v;
  if (!x && !y) return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
  return false;
}

std::string Scalar::str() const {
  if (auto* m = std::get_if<ModP>(&rep_)) return std::to_string(m->v);
  return std::get<mpq_class>(rep_).get_str();
}

Scalar Scalar::parse(Field f, const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw InputError("not a rational number: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator: " + text);
  return Scalar(f, q);
}

} // namespace scx::algebra
