#include "scx/grp/quotient.hpp"

#include "scx/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace scx::grp {

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw InputError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n > 255) throw SizeLimitError("permutation degree too large");
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (std::size_t i = 0; i < img_.size(); ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error("permutation degree mismatch");
  Permutation p = b;
  for (std::size_t i = 0; i < b.img_.size(); ++i) p.img_[i] = a.img_[b.img_[i]];
  return p;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> done(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (done[i] || img_[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::parse_cycles(const std::string& text, std::size_t degree) {
  Permutation p = identity(degree);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  std::vector<bool> used(degree, false);
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InputError("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip();
      if (pos >= text.size()) throw InputError("unterminated cycle: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t used_chars = 0;
      long v = 0;
      try {
        v = std::stol(text.substr(pos), &used_chars);
      } catch (const std::logic_error&) {
        throw InputError("bad point in cycle: " + text);
      }
      if (v < 1 || static_cast<std::size_t>(v) > degree)
        throw InputError("cycle point out of range: " + text);
      cyc.push_back(static_cast<std::size_t>(v - 1));
      pos += used_chars;
    }
    for (auto c : cyc) {
      if (used[c]) throw InputError("point repeated in cycle notation: " + text);
      used[c] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i)
      p.img_[cyc[i]] = static_cast<std::uint8_t>(cyc[(i + 1) % cyc.size()]);
    skip();
  }
  return p;
}

Permutation evaluate(const Word& w, const std::vector<Permutation>& images,
                     std::size_t degree) {
  // Apply letters right to left to each point.
  std::vector<std::uint8_t> pt(degree);
  std::iota(pt.begin(), pt.end(), 0);
  const auto& ls = w.letters();
  std::vector<Permutation> inv;
  for (std::size_t i = 0; i < degree; ++i) {
    std::size_t x = i;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      const Permutation& s = images.at(it->gen);
      if (it->exp > 0) {
        x = s(x);
      } else {
        const auto& im = s.images();
        x = static_cast<std::size_t>(std::find(im.begin(), im.end(), x) - im.begin());
      }
    }
    pt[i] = static_cast<std::uint8_t>(x);
  }
  return Permutation(pt);
}

bool check_hom(const GroupPresentation& pres, const std::vector<Permutation>& images) {
  if (images.size() != pres.generator_count())
    throw InputError("expected " + std::to_string(pres.generator_count()) +
                     " generator images, got " + std::to_string(images.size()));
  const std::size_t n = images.empty() ? 1 : images.front().degree();
  for (const auto& p : images)
    if (p.degree() != n) throw InputError("generator images have different degrees");
  for (const auto& r : pres.relators())
    if (!evaluate(r, images, n).is_identity()) return false;
  return true;
}

std::vector<Permutation> closure(const std::vector<Permutation>& gens, std::size_t degree,
                                 std::size_t cap) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& h : frontier)
      for (const auto& g : gens) {
        Permutation gh = g * h;
        if (seen.insert(gh).second) {
          if (seen.size() > cap)
            throw SizeLimitError("subgroup order exceeds cap " + std::to_string(cap));
          next.push_back(std::move(gh));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool is_transitive(const std::vector<Permutation>& gens, std::size_t degree) {
  if (degree == 0) return true;
  std::vector<bool> hit(degree, false);
  std::vector<std::size_t> stack{0};
  hit[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      const std::size_t y = g(x);
      if (!hit[y]) {
        hit[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree;
}

FiniteQuotient make_quotient(const GroupPresentation& pres, std::vector<Permutation> images,
                             std::size_t degree) {
  if (images.size() != pres.generator_count()) throw InputError("quotient arity mismatch");
  for (const auto& p : images)
    if (p.degree() != degree) throw InputError("quotient degree mismatch");
  if (!check_hom(pres, images)) throw InputError("images do not satisfy the relators");
  FiniteQuotient q;
  q.degree = degree;
  q.images = std::move(images);
  q.transitive = is_transitive(q.images, degree);
  q.image_order = closure(q.images, degree).size();
  return q;
}

std::string FiniteQuotient::str(const GroupPresentation& pres) const {
  std::ostringstream os;
  os << "S" << degree << ":";
  for (std::size_t i = 0; i < images.size(); ++i)
    os << (i ? ", " : " ") << pres.generators()[i] << "=" << images[i].str();
  os << " |im|=" << image_order << (transitive ? " transitive" : "");
  return os.str();
}

namespace {

/// Backtracking search for one degree with the first generator fixed (or
/// free when `first` is null). Results are appended in lexicographic order.
class DegreeSearch {
public:
  DegreeSearch(const GroupPresentation& pres, std::size_t degree, const QuotientSearch& opts)
      : pres_(pres), n_(degree), opts_(opts) {
    std::vector<std::uint8_t> v(n_);
    std::iota(v.begin(), v.end(), 0);
    do all_.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    // relators become checkable once their largest generator is assigned
    ready_.resize(pres.generator_count());
    for (const auto& r : pres.relators()) {
      const auto mg = r.max_generator();
      if (mg) ready_[*mg].push_back(&r);
      else trivial_.push_back(&r);
    }
  }

  const std::vector<Permutation>& all() const { return all_; }

  void run_from(std::size_t first_index, std::vector<FiniteQuotient>& out) const {
    std::vector<Permutation> images(pres_.generator_count());
    if (images.empty()) {
      emit(images, out);
      return;
    }
    images[0] = all_[first_index];
    if (!relators_ok(0, images)) return;
    recurse(1, images, out);
  }

private:
  bool relators_ok(std::size_t gen, const std::vector<Permutation>& images) const {
    for (const Word* r : ready_[gen])
      if (!evaluate(*r, images, n_).is_identity()) return false;
    return true;
  }
  void recurse(std::size_t gen, std::vector<Permutation>& images,
               std::vector<FiniteQuotient>& out) const {
    if (gen == images.size()) {
      emit(images, out);
      return;
    }
    for (const auto& p : all_) {
      images[gen] = p;
      if (relators_ok(gen, images)) recurse(gen + 1, images, out);
    }
  }
  void emit(const std::vector<Permutation>& images, std::vector<FiniteQuotient>& out) const {
    const bool transitive = is_transitive(images, n_);
    if (opts_.transitive_only && !transitive) return;
    FiniteQuotient q;
    q.degree = n_;
    q.images = images;
    q.transitive = transitive;
    q.image_order = closure(images, n_).size();
    out.push_back(std::move(q));
  }

  const GroupPresentation& pres_;
  std::size_t n_;
  QuotientSearch opts_;
  std::vector<Permutation> all_;
  std::vector<std::vector<const Word*>> ready_;
  std::vector<const Word*> trivial_;
};

} // namespace

void enumerate_quotients(const GroupPresentation& pres, const QuotientSearch& opts,
                         const std::function<bool(const FiniteQuotient&)>& sink) {
  if (opts.max_degree > 8) throw SizeLimitError("quotient search degree capped at 8");
  for (std::size_t m = 2; m <= opts.max_degree; ++m) {
    DegreeSearch search(pres, m, opts);
    const std::size_t branches = pres.generator_count() == 0 ? 1 : search.all().size();
    const unsigned threads = std::max(1u, opts.threads);
    // Process branches in batches; each batch runs in parallel, then its
    // results are emitted in branch order.
    const std::size_t batch = threads;
    for (std::size_t start = 0; start < branches; start += batch) {
      const std::size_t stop = std::min(branches, start + batch);
      std::vector<std::vector<FiniteQuotient>> results(stop - start);
      if (threads == 1) {
        search.run_from(start, results[0]);
      } else {
        std::vector<std::thread> pool;
        for (std::size_t b = start; b < stop; ++b)
          pool.emplace_back([&, b] { search.run_from(b, results[b - start]); });
        for (auto& t : pool) t.join();
      }
      for (const auto& chunk : results)
        for (const auto& q : chunk)
          if (!sink(q)) return;
    }
  }
}

std::vector<FiniteQuotient> enumerate_quotients(const GroupPresentation& pres,
                                                const QuotientSearch& opts) {
  std::vector<FiniteQuotient> out;
  enumerate_quotients(pres, opts, [&](const FiniteQuotient& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

unsigned default_threads() {
  if (const char* env = std::getenv("SCX_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

} // namespace scx::grp
