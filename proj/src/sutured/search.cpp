#include "scx/sutured/sutured.hpp"

#include "scx/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace scx::sutured {

using grp::FiniteQuotient;
using grp::Word;

namespace {

std::vector<std::string> standing_assumptions(const SuturedComplex&) {
  return {"M is irreducible (asserted by metadata)", "M is not S^1 x D^2 (asserted by metadata)",
          "M is not D^3 (asserted by metadata)"};
}

/// Evaluates `test` over a batch (in parallel when threads > 1) and returns
/// the lowest index that succeeded.
template <class F>
std::optional<std::pair<std::size_t, Witness>> first_success(const std::vector<FiniteQuotient>& batch,
                                                             unsigned threads, F test) {
  std::vector<std::optional<Witness>> results(batch.size());
  if (threads <= 1 || batch.size() < 2) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      results[i] = test(batch[i]);
      if (results[i]) return std::make_pair(i, *results[i]);
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{batch.size()};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= batch.size() || i > best.load()) break;
          results[i] = test(batch[i]);
          if (results[i]) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
          }
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (std::size_t i = 0; i < batch.size(); ++i)
    if (results[i]) return std::make_pair(i, *results[i]);
  return std::nullopt;
}

/// Streams quotients in batches; stops at the first batch with a success.
template <class F>
std::optional<Witness> search_quotients(const GroupPresentation& g, const SearchOptions& opts,
                                        Verdict& v, F test) {
  const unsigned threads = std::max(1u, opts.threads);
  const std::size_t batch_size = 16 * threads;
  std::vector<FiniteQuotient> batch;
  std::optional<Witness> found;
  std::size_t current_degree = 0;
  auto flush = [&] {
    if (batch.empty()) return;
    const auto hit = first_success(batch, threads, test);
    if (hit) {
      found = hit->second;
      v.representations_tested += hit->first + 1;
    } else {
      v.representations_tested += batch.size();
    }
    batch.clear();
  };
  grp::QuotientSearch qs{opts.max_degree, false, threads};
  grp::enumerate_quotients(g, qs, [&](const FiniteQuotient& q) {
    if (q.degree != current_degree) {
      flush();
      if (found) return false;
      if (current_degree != 0) v.degrees_exhausted = current_degree;
      current_degree = q.degree;
    }
    batch.push_back(q);
    if (batch.size() >= batch_size) flush();
    return !found;
  });
  flush();
  if (!found) v.degrees_exhausted = std::max(opts.max_degree, v.degrees_exhausted);
  return found;
}

std::size_t subgroup_order(const std::vector<Word>& words, const FiniteQuotient& q) {
  std::vector<grp::Permutation> gens;
  for (const auto& w : words) gens.push_back(grp::evaluate(w, q.images, q.degree));
  return grp::closure(gens, q.degree).size();
}

} // namespace

Verdict certify_taut(const SuturedComplex& sc, const SearchOptions& opts) {
  Verdict v;
  v.assumptions = standing_assumptions(sc);
  const auto val = validate(sc);
  if (!val.ok()) {
    v.status = Status::Refused;
    v.reason = "invalid sutured complex: " + val.errors.front();
    return v;
  }
  if (!sc.balanced()) {
    v.status = Status::Refused;
    v.reason = "not balanced (chi(R-) = " + std::to_string(sc.chi_rminus) +
               ", chi(R+) = " + std::to_string(sc.chi_rplus) + ")";
    return v;
  }
  if (!sc.irreducible) {
    v.status = Status::Refused;
    v.reason = "M is not asserted irreducible";
    return v;
  }
  if (sc.s1xd2 || sc.d3) {
    v.status = Status::Refused;
    v.reason = std::string("excluded case: M is ") + (sc.s1xd2 ? "S^1 x D^2" : "D^3") +
               " (no vanishing certificate exists or the criterion does not apply)";
    return v;
  }
  const grp::Field q = grp::Field::rationals();
  auto witness_for = [&](const Representation& rep, const std::string& test) -> std::optional<Witness> {
    const auto b = chain::betti(sc.m, &sc.rminus, rep);
    if (b.b[1] != 0) return std::nullopt;
    Witness w;
    w.test = test;
    w.representation = rep.describe(sc.m.group());
    w.betti = b;
    w.betti_plus = chain::betti(sc.m, &sc.rplus, rep);
    return w;
  };
  const auto trivial = Representation::trivial(sc.m.group(), 1, q);
  v.representations_tested = 1;
  if (auto w = witness_for(trivial, "trivial")) {
    v.status = Status::CertifiedTaut;
    v.witness = w;
    v.log.push_back("trivial representation: b1(M,R-) = 0");
    return v;
  }
  v.log.push_back("trivial representation: b1(M,R-) != 0");
  const auto found = search_quotients(sc.m.group(), opts, v, [&](const FiniteQuotient& fq) {
    // Over Q the permutation representation is trivial + reduced, and the
    // trivial summand has already failed, so only the reduced part can help.
    auto w = witness_for(grp::reduced_permutation_representation(sc.m.group(), fq, q), "permutation");
    if (w) {
      w->quotient = fq;
      w->image_order = fq.image_order;
    }
    return w;
  });
  if (found) {
    v.status = Status::CertifiedTaut;
    v.witness = found;
    return v;
  }
  v.status = Status::Unknown;
  v.reason = "no permutation representation of degree <= " + std::to_string(opts.max_degree) +
             " has b1(M,R-) = 0; the search is not exhaustive over all unitary representations";
  return v;
}

std::vector<Word> loop_words(const EquivariantComplex& cx, const SubcomplexRef& s) {
  std::vector<std::size_t> verts, edges;
  for (auto c : s.cells) {
    if (cx.cell(c).dim == 0) verts.push_back(c);
    if (cx.cell(c).dim == 1) edges.push_back(c);
  }
  if (verts.empty()) return {};
  struct Ends {
    std::size_t a, b;
    Word wa, wb;
    bool degenerate;
  };
  std::vector<Ends> ends;
  for (auto e : edges) {
    const auto& bd = cx.cell(e).boundary;
    if (bd.size() != 2 || bd[0].coeff + bd[1].coeff != 0 || std::abs(bd[0].coeff) != 1)
      throw InputError("edge '" + cx.cell(e).name + "' is not of the form b*w_b - a*w_a");
    const auto& head = bd[0].coeff > 0 ? bd[0] : bd[1];
    const auto& tail = bd[0].coeff > 0 ? bd[1] : bd[0];
    ends.push_back({tail.cell, head.cell, tail.word, head.word, false});
  }
  std::map<std::size_t, Word> offset{{verts.front(), Word()}};
  std::vector<bool> tree(ends.size(), false);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < ends.size(); ++i) {
      const auto& e = ends[i];
      const bool ha = offset.count(e.a), hb = offset.count(e.b);
      if (ha && !hb) {
        offset[e.b] = e.wb * e.wa.inverse() * offset[e.a];
      } else if (hb && !ha) {
        offset[e.a] = e.wa * e.wb.inverse() * offset[e.b];
      } else {
        continue;
      }
      tree[i] = true;
      grew = true;
    }
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    const auto& e = ends[i];
    if (tree[i] || !offset.count(e.a) || !offset.count(e.b)) continue;
    Word lam = offset[e.b].inverse() * e.wb * e.wa.inverse() * offset[e.a];
    if (!lam.empty()) out.push_back(lam);
  }
  return out;
}

Verdict nonproduct_search(const SuturedComplex& sc, const SearchOptions& opts) {
  Verdict v;
  const auto val = validate(sc);
  if (!val.ok()) {
    v.status = Status::Refused;
    v.reason = "invalid sutured complex: " + val.errors.front();
    return v;
  }
  const grp::Field q = grp::Field::rationals();
  const auto& g = sc.m.group();
  const auto comps = chain::components(sc.m, sc.rminus);
  if (comps.size() > 1) {
    const auto b = chain::betti(sc.m, &sc.rminus, Representation::trivial(g, 1, q));
    v.representations_tested = 1;
    v.log.push_back("R- has " + std::to_string(comps.size()) + " components");
    if (b.b[1] > 0) {
      Witness w;
      w.test = "untwisted";
      w.representation = "trivial representation of dimension 1 over q";
      w.betti = b;
      w.detail = "R- is disconnected, so H_1(M,R-;Q) != 0 (b1 = " + std::to_string(b.b[1]) + ")";
      v.status = Status::CertifiedNotProduct;
      v.witness = w;
      return v;
    }
  }
  {
    const auto b = chain::betti(sc.m, &sc.rminus, Representation::trivial(g, 1, q));
    ++v.representations_tested;
    if (b.b[1] > 0) {
      Witness w;
      w.test = "trivial";
      w.representation = "trivial representation of dimension 1 over q";
      w.betti = b;
      w.detail = "b1(M,R-;Q) = " + std::to_string(b.b[1]);
      v.status = Status::CertifiedNotProduct;
      v.witness = w;
      return v;
    }
  }
  const auto loops = loop_words(sc.m, sc.rminus);
  std::atomic<bool> capped{false};
  const auto found = search_quotients(g, opts, v, [&](const FiniteQuotient& fq) -> std::optional<Witness> {
    Witness w;
    w.quotient = fq;
    w.image_order = fq.image_order;
    w.rminus_order = subgroup_order(loops, fq);
    const bool index_fires = w.rminus_order < w.image_order;
    std::optional<chain::BettiVector> direct;
    try {
      const auto reg = grp::regular_representation(g, fq, q, opts.regular_cap);
      direct = chain::betti(sc.m, &sc.rminus, reg);
      w.representation = reg.describe(g);
    } catch (const SizeLimitError&) {
      capped = true;
    }
    if (index_fires) {
      w.test = "index";
      w.betti = direct;
      w.detail = "|im pi1(R-)| = " + std::to_string(w.rminus_order) + " < |G| = " +
                 std::to_string(w.image_order) + "; H_0(R-;C[G]) has dimension " +
                 std::to_string(w.image_order / std::max<std::size_t>(w.rminus_order, 1));
      if (direct) w.detail += "; regular representation gives b1 = " + std::to_string(direct->b[1]);
      return w;
    }
    if (direct && direct->b[1] != 0) {
      w.test = "regular";
      w.betti = direct;
      w.detail = "regular representation of G (order " + std::to_string(w.image_order) +
                 ") gives b1 = " + std::to_string(direct->b[1]);
      return w;
    }
    return std::nullopt;
  });
  if (capped) v.log.push_back("some quotients exceeded the regular-representation cap; index test only");
  if (found) {
    v.status = Status::CertifiedNotProduct;
    v.witness = found;
    return v;
  }
  v.status = Status::Unknown;
  v.reason = "no quotient of degree <= " + std::to_string(opts.max_degree) + " obstructs a product structure";
  return v;
}

} // namespace scx::sutured
