#pragma once

#include "scx/grp/group.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace scx::grp {

/// Permutation of {0..n-1}; (a * b)(i) = a(b(i)). Ordered lexicographically
/// by image list.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images); // validates bijectivity
  static Permutation identity(std::size_t n);

  std::size_t degree() const { return img_.size(); }
  std::size_t operator()(std::size_t i) const { return img_[i]; }
  const std::vector<std::uint8_t>& images() const { return img_; }
  bool is_identity() const;
  Permutation inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// Cycle notation with 1-based points, e.g. "(1 2)(3 4)"; identity is "()".
  std::string str() const;
  /// Parses cycle notation of the given degree ("()" or "" is the identity).
  static Permutation parse_cycles(const std::string& text, std::size_t degree);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::uint8_t> img_;
};

/// Image of a word: letters compose left to right as maps, w = l1 l2 ... ln
/// evaluates to s(l1) * s(l2) * ... * s(ln).
Permutation evaluate(const Word& w, const std::vector<Permutation>& images,
                     std::size_t degree);

/// True iff every relator maps to the identity. Throws InputError on arity
/// or degree mismatch.
bool check_hom(const GroupPresentation& pres, const std::vector<Permutation>& images);

/// Subgroup of S_n generated by `gens`, sorted ascending. Throws
/// SizeLimitError if the closure exceeds `cap` elements.
std::vector<Permutation> closure(const std::vector<Permutation>& gens, std::size_t degree,
                                 std::size_t cap = 1000000);
bool is_transitive(const std::vector<Permutation>& gens, std::size_t degree);

struct FiniteQuotient {
  std::size_t degree = 1;
  std::vector<Permutation> images; // one per generator
  bool transitive = true;
  std::size_t image_order = 1;

  std::string str(const GroupPresentation& pres) const;
  friend bool operator==(const FiniteQuotient&, const FiniteQuotient&) = default;
};

FiniteQuotient make_quotient(const GroupPresentation& pres, std::vector<Permutation> images,
                             std::size_t degree);

struct QuotientSearch {
  std::size_t max_degree = 4;
  bool transitive_only = false;
  unsigned threads = 1;
};

/// All homomorphisms to S_m, 2 <= m <= max_degree, in order of m then
/// lexicographically on the image tuple. The sink returns false to stop.
/// Output order and content do not depend on `threads`.
void enumerate_quotients(const GroupPresentation& pres, const QuotientSearch& opts,
                         const std::function<bool(const FiniteQuotient&)>& sink);
std::vector<FiniteQuotient> enumerate_quotients(const GroupPresentation& pres,
                                                const QuotientSearch& opts);

/// Thread count from the SCX_THREADS environment variable (default 1).
unsigned default_threads();

} // namespace scx::grp
