#include "scx/algebra/laurent.hpp"

#include "scx/error.hpp"

#include <algorithm>
#include <cctype>

namespace scx::algebra {

LaurentPoly::LaurentPoly(Field f, int lowest, std::vector<Scalar> coeffs)
    : field_(f), low_(lowest), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == f)) throw Error("Laurent coefficient field mismatch");
  normalize();
}

LaurentPoly LaurentPoly::constant(const Scalar& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Scalar& c, int n) {
  return LaurentPoly(c.field(), n, {c});
}

LaurentPoly LaurentPoly::from_ints(Field f, std::vector<long> ascending,
                                   int lowest) {
  std::vector<Scalar> cs;
  cs.reserve(ascending.size());
  for (long v : ascending) cs.emplace_back(f, v);
  return LaurentPoly(f, lowest, std::move(cs));
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1].is_zero()) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<Scalar>(coeffs_.begin() + first, coeffs_.begin() + last);
    low_ += static_cast<int>(first);
  }
}

std::optional<int> LaurentPoly::degree() const {
  if (is_zero()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Scalar LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > highest())
    return Scalar::zero(field_);
  return coeffs_[exponent - low_];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (!(field_ == o.field_)) throw Error("Laurent field mismatch");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(highest(), o.highest());
  std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1),
                          Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[low_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[o.low_ - lo + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.field_ == b.field_)) throw Error("Laurent field mismatch");
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                          Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.field_, a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  return *this = *this * o;
}

LaurentPoly operator*(const Scalar& s, const LaurentPoly& p) {
  LaurentPoly r = p;
  for (auto& c : r.coeffs_) c *= s;
  r.normalize();
  return r;
}

LaurentPoly operator*(long s, const LaurentPoly& p) {
  return Scalar(p.field_, s) * p;
}

LaurentPoly LaurentPoly::shifted(int n) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += n;
  return r;
}

LaurentPoly LaurentPoly::canonical() const {
  if (is_zero()) return *this;
  return leading().inverse() * shifted(-low_);
}

bool LaurentPoly::associated(const LaurentPoly& a, const LaurentPoly& b) {
  return a.canonical() == b.canonical();
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& a,
                                                        const LaurentPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if ((!a.is_zero() && a.low_ < 0) || b.low_ < 0)
    throw Error("divmod expects ordinary polynomials");
  const Field f = b.field_;
  LaurentPoly rem = a;
  LaurentPoly quo(f);
  const int db = b.highest();
  const Scalar inv_lead = b.leading().inverse();
  while (!rem.is_zero() && rem.highest() >= db) {
    const int shift = rem.highest() - db;
    const LaurentPoly term = monomial(rem.leading() * inv_lead, shift);
    quo += term;
    rem -= term * b;
  }
  return {quo, rem};
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.is_zero()) return LaurentPoly(a.field_);
  const auto [q, r] = divmod(a.shifted(-a.low_), b.shifted(-b.low_));
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q.shifted(a.low_ - b.low_);
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    const int e = low_ + static_cast<int>(i);
    bool negative = field_.is_rational() && sgn(c.rational()) < 0;
    const Scalar mag = negative ? -c : c;
    std::string term;
    if (e == 0) {
      term = mag.str();
    } else {
      const std::string var = e == 1 ? "t" : "t^" + std::to_string(e);
      term = mag.is_one() ? var : mag.str() + "*" + var;
    }
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

LaurentPoly LaurentPoly::parse(Field f, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InputError("empty polynomial");
  LaurentPoly result(f);
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw InputError("malformed polynomial: " + text);
    }
    std::size_t end = pos;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && s[end - 1] != '^'))
      ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw InputError("malformed polynomial: " + text);
    Scalar coeff = Scalar::one(f);
    int exponent = 0;
    const auto tpos = term.find('t');
    if (tpos == std::string::npos) {
      coeff = Scalar::parse(f, term);
    } else {
      if (tpos > 0) {
        if (term[tpos - 1] != '*') throw InputError("malformed term: " + term);
        coeff = Scalar::parse(f, term.substr(0, tpos - 1));
      }
      const std::string rest = term.substr(tpos + 1);
      if (rest.empty()) {
        exponent = 1;
      } else {
        if (rest[0] != '^' || rest.size() < 2) throw InputError("malformed term: " + term);
        try {
          std::size_t used = 0;
          exponent = std::stoi(rest.substr(1), &used);
          if (used != rest.size() - 1) throw InputError("malformed exponent: " + term);
        } catch (const std::logic_error&) {
          throw InputError("malformed exponent: " + term);
        }
      }
    }
    if (negative) coeff = -coeff;
    result += monomial(coeff, exponent);
    pos = end;
  }
  return result;
}

} // namespace scx::algebra
