#include "scx/sutured/sutured.hpp"

#include "scx/error.hpp"

#include <map>
#include <set>

namespace scx::sutured {

using chain::BoundaryTerm;
using grp::Letter;
using grp::Word;

namespace {

Word shift(const Word& w, std::size_t offset) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) out.push_back({l.gen + offset, l.exp});
  return Word(out);
}

} // namespace

// Two copies of M glued along R = R- u R+. Copy-1 cells keep their names,
// copy-2 cells outside R get ".2". A shared cell f carries an offset H_f with
// (copy-2 lift of f) = (copy-1 lift of f) * H_f; offsets are spread through
// each component of R by boundary incidences, and every component root past
// the first introduces a stable letter.
DoubleResult double_complex(const SuturedComplex& sc) {
  const auto val = validate(sc);
  if (!val.ok()) throw InputError("cannot double an invalid sutured complex: " + val.errors.front());
  const auto& m = sc.m;
  const auto& g = m.group();
  const std::size_t n = g.generator_count();
  const long chi_m = m.euler_characteristic();
  const long chi_r = sc.chi_rminus + sc.chi_rplus;
  if (2 * chi_m != chi_r)
    throw InputError("chi(M) = " + std::to_string(chi_m) + " but chi(R-) + chi(R+) = " +
                     std::to_string(chi_r) + "; the double would not have chi = 0");

  auto i1 = [&](const Word& w) { return shift(w, 0); };
  auto i2 = [&](const Word& w) { return shift(w, n); };

  std::vector<std::string> names;
  for (const auto& s : g.generators()) names.push_back(s + ".1");
  for (const auto& s : g.generators()) names.push_back(s + ".2");

  // Components: R+ first so that its first component anchors the gluing.
  std::vector<std::pair<std::vector<std::size_t>, bool>> comps; // cells, is R-
  for (auto& c : chain::components(m, sc.rplus)) comps.push_back({c, false});
  for (auto& c : chain::components(m, sc.rminus)) comps.push_back({c, true});

  DoubleResult res;
  std::vector<long> phi_stable;
  std::map<std::size_t, Word> offset;
  std::vector<Word> glue;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& [cells, minus] = comps[ci];
    Word root;
    if (ci > 0) {
      const std::string t = res.stable_letters.empty() ? "t" : "t" + std::to_string(res.stable_letters.size() + 1);
      res.stable_letters.push_back(t);
      phi_stable.push_back(minus ? 1 : 0);
      root = Word::generator(2 * n + res.stable_letters.size() - 1);
    }
    offset[cells.front()] = root;
    std::set<std::size_t> in(cells.begin(), cells.end());
    std::vector<std::pair<std::size_t, std::size_t>> inc; // (cell, term index)
    for (auto f : cells)
      for (std::size_t k = 0; k < m.cell(f).boundary.size(); ++k)
        if (in.count(m.cell(f).boundary[k].cell)) inc.push_back({f, k});
    std::vector<bool> used(inc.size(), false);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < inc.size(); ++i) {
        if (used[i]) continue;
        const auto f = inc[i].first;
        const auto& t = m.cell(f).boundary[inc[i].second];
        const bool hf = offset.count(f), hg = offset.count(t.cell);
        if (hf && !hg) {
          offset[t.cell] = i1(t.word) * offset[f] * i2(t.word).inverse();
        } else if (hg && !hf) {
          offset[f] = i1(t.word).inverse() * offset[t.cell] * i2(t.word);
        } else {
          continue;
        }
        used[i] = grew = true;
      }
    }
    for (std::size_t i = 0; i < inc.size(); ++i) {
      if (used[i]) continue;
      const auto f = inc[i].first;
      const auto& t = m.cell(f).boundary[inc[i].second];
      Word r = i1(t.word) * offset[f] * i2(t.word).inverse() * offset[t.cell].inverse();
      if (!r.empty() && std::find(glue.begin(), glue.end(), r) == glue.end()) glue.push_back(r);
    }
  }
  for (const auto& t : res.stable_letters) names.push_back(t);

  std::vector<Word> rels;
  for (const auto& r : g.relators()) rels.push_back(i1(r));
  for (const auto& r : g.relators()) rels.push_back(i2(r));
  rels.insert(rels.end(), glue.begin(), glue.end());

  chain::EquivariantComplex dm(grp::GroupPresentation(names, rels));
  auto shared = [&](std::size_t c) { return sc.rminus.contains(c) || sc.rplus.contains(c); };
  std::vector<std::size_t> copy2(m.size());
  for (std::size_t c = 0; c < m.size(); ++c) dm.add_cell(m.cell(c).name, m.cell(c).dim);
  for (std::size_t c = 0; c < m.size(); ++c)
    copy2[c] = shared(c) ? c : dm.add_cell(m.cell(c).name + ".2", m.cell(c).dim);
  for (std::size_t c = 0; c < m.size(); ++c) {
    std::vector<BoundaryTerm> b1;
    for (const auto& t : m.cell(c).boundary) b1.push_back({t.coeff, i1(t.word), t.cell});
    dm.set_boundary(c, b1);
    if (shared(c)) continue;
    std::vector<BoundaryTerm> b2;
    for (const auto& t : m.cell(c).boundary)
      b2.push_back({t.coeff, shared(t.cell) ? offset.at(t.cell) * i2(t.word) : i2(t.word), copy2[t.cell]});
    dm.set_boundary(copy2[c], b2);
  }

  res.phi.values.assign(2 * n, 0);
  res.phi.values.insert(res.phi.values.end(), phi_stable.begin(), phi_stable.end());
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < n; ++i) res.retraction.push_back(Word::generator(i));
  for (std::size_t i = 0; i < res.stable_letters.size(); ++i) res.retraction.emplace_back();

  auto& doc = res.document;
  doc.header = {"Double of a sutured complex along R- and R+.",
                "Copy-2 cells carry the suffix .2; t, t2, ... are stable letters."};
  doc.complex = std::move(dm);
  const auto& dg = doc.complex.group();
  auto rename = [&](const chain::SubcomplexRef& s, const std::string& name) {
    chain::SubcomplexRef out{name, s.cells};
    return out;
  };
  doc.subcomplexes.push_back(rename(sc.rminus, "R-"));
  doc.subcomplexes.push_back(rename(sc.rplus, "R+"));
  std::string retr;
  for (std::size_t i = 0; i < res.retraction.size(); ++i)
    retr += (i ? " " : "") + dg.generators()[i] + "=" + g.str(res.retraction[i]);
  doc.set_meta("double", "1");
  doc.set_meta("phi", res.phi.str(dg));
  doc.set_meta("retraction", retr);
  if (doc.complex.euler_characteristic() != 0)
    throw BoundaryError("double has nonzero Euler characteristic");
  return res;
}

} // namespace scx::sutured
