#include "scx/chain/complex.hpp"

#include "scx/error.hpp"

#include <algorithm>
#include <numeric>

namespace scx::chain {

std::size_t EquivariantComplex::add_cell(const std::string& name, int dim) {
  if (dim < 0 || dim > 3) throw InputError("cell '" + name + "' has dimension outside 0..3");
  if (name.empty()) throw InputError("empty cell name");
  if (by_name_.count(name)) throw InputError("duplicate cell '" + name + "'");
  cells_.push_back({name, dim, {}});
  by_name_[name] = cells_.size() - 1;
  return cells_.size() - 1;
}

void EquivariantComplex::set_boundary(std::size_t cell, std::vector<BoundaryTerm> terms) {
  Cell& c = cells_.at(cell);
  if (c.dim == 0 && !terms.empty()) throw InputError("0-cell '" + c.name + "' has a boundary");
  for (const auto& t : terms) {
    if (t.cell >= cells_.size()) throw InputError("boundary term references unknown cell");
    if (cells_[t.cell].dim != c.dim - 1)
      throw InputError("boundary of '" + c.name + "' references '" + cells_[t.cell].name +
                       "' of dimension " + std::to_string(cells_[t.cell].dim));
    const auto mg = t.word.max_generator();
    if (mg && *mg >= group_.generator_count())
      throw InputError("boundary of '" + c.name + "' uses an undeclared generator");
  }
  c.boundary = std::move(terms);
}

std::optional<std::size_t> EquivariantComplex::find(const std::string& name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t EquivariantComplex::index(const std::string& name) const {
  const auto i = find(name);
  if (!i) throw InputError("unknown cell '" + name + "'");
  return *i;
}

std::vector<std::size_t> EquivariantComplex::cells_of_dim(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dim == d) out.push_back(i);
  return out;
}

long EquivariantComplex::euler_characteristic() const {
  return chain::euler_characteristic(*this, nullptr);
}

bool SubcomplexRef::contains(std::size_t c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

SubcomplexRef make_subcomplex(const EquivariantComplex& cx, const std::string& name,
                              const std::vector<std::string>& cell_names) {
  SubcomplexRef s{name, {}};
  for (const auto& n : cell_names) {
    const auto i = cx.find(n);
    if (!i) throw InputError("subcomplex '" + name + "' lists unknown cell '" + n + "'");
    s.cells.push_back(*i);
  }
  std::sort(s.cells.begin(), s.cells.end());
  if (std::adjacent_find(s.cells.begin(), s.cells.end()) != s.cells.end())
    throw InputError("subcomplex '" + name + "' lists a cell twice");
  return s;
}

std::vector<std::size_t> open_cells(const EquivariantComplex& cx, const SubcomplexRef& s) {
  std::vector<std::size_t> out;
  for (auto c : s.cells)
    for (const auto& t : cx.cell(c).boundary)
      if (!s.contains(t.cell)) out.push_back(t.cell);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_closed(const EquivariantComplex& cx, const SubcomplexRef& s) {
  const auto open = open_cells(cx, s);
  if (!open.empty())
    throw InputError("subcomplex '" + s.name + "' is not closed: missing boundary cell '" +
                     cx.cell(open.front()).name + "'");
}

SubcomplexRef subcomplex_union(const std::string& name, const SubcomplexRef& a,
                               const SubcomplexRef& b) {
  SubcomplexRef s{name, {}};
  std::set_union(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(),
                 std::back_inserter(s.cells));
  return s;
}

SubcomplexRef all_cells(const EquivariantComplex& cx, const std::string& name) {
  SubcomplexRef s{name, std::vector<std::size_t>(cx.size())};
  std::iota(s.cells.begin(), s.cells.end(), 0);
  return s;
}

long euler_characteristic(const EquivariantComplex& cx, const SubcomplexRef* y) {
  long chi = 0;
  for (std::size_t i = 0; i < cx.size(); ++i) {
    if (y && y->contains(i)) continue;
    chi += cx.cell(i).dim % 2 == 0 ? 1 : -1;
  }
  return chi;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<std::vector<std::size_t>> components(const EquivariantComplex& cx,
                                                 const SubcomplexRef& s) {
  UnionFind uf(cx.size());
  for (auto c : s.cells)
    for (const auto& t : cx.cell(c).boundary)
      if (s.contains(t.cell)) uf.join(c, t.cell);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (auto c : s.cells) groups[uf.find(c)].push_back(c);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool one_skeleton_connected(const EquivariantComplex& cx) {
  const auto verts = cx.cells_of_dim(0);
  if (verts.empty()) return false;
  UnionFind uf(cx.size());
  for (auto e : cx.cells_of_dim(1))
    for (const auto& t : cx.cell(e).boundary) uf.join(e, t.cell);
  const std::size_t root = uf.find(verts.front());
  for (auto v : verts)
    if (uf.find(v) != root) return false;
  return true;
}

EquivariantComplex restrict_to(const EquivariantComplex& cx, const SubcomplexRef& s) {
  require_closed(cx, s);
  EquivariantComplex out(cx.group());
  std::vector<std::size_t> newidx(cx.size(), 0);
  for (auto c : s.cells) newidx[c] = out.add_cell(cx.cell(c).name, cx.cell(c).dim);
  for (auto c : s.cells) {
    auto terms = cx.cell(c).boundary;
    for (auto& t : terms) t.cell = newidx[t.cell];
    out.set_boundary(newidx[c], std::move(terms));
  }
  return out;
}

EquivariantComplex permute_cells(const EquivariantComplex& cx,
                                 const std::vector<std::size_t>& order) {
  // order[j] = old index of the j-th new cell
  std::vector<std::size_t> inv(cx.size());
  for (std::size_t j = 0; j < order.size(); ++j) inv[order[j]] = j;
  EquivariantComplex out(cx.group());
  for (auto old : order) out.add_cell(cx.cell(old).name, cx.cell(old).dim);
  for (std::size_t j = 0; j < order.size(); ++j) {
    auto terms = cx.cell(order[j]).boundary;
    for (auto& t : terms) t.cell = inv[t.cell];
    out.set_boundary(j, std::move(terms));
  }
  return out;
}

SubcomplexRef remap(const SubcomplexRef& s, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> inv(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) inv[order[j]] = j;
  SubcomplexRef r{s.name, {}};
  for (auto c : s.cells) r.cells.push_back(inv[c]);
  std::sort(r.cells.begin(), r.cells.end());
  return r;
}

EquivariantComplex presentation_complex(const GroupPresentation& pres) {
  EquivariantComplex cx(pres);
  const std::size_t v = cx.add_cell("v", 0);
  std::vector<std::size_t> edges;
  for (const auto& g : pres.generators()) {
    const std::size_t e = cx.add_cell("e_" + g, 1);
    // lift runs from v to v.g
    cx.set_boundary(e, {{1, Word::generator(edges.size()), v}, {-1, Word(), v}});
    edges.push_back(e);
  }
  for (std::size_t r = 0; r < pres.relators().size(); ++r) {
    const auto& ls = pres.relators()[r].letters();
    std::vector<BoundaryTerm> terms;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (ls[i].exp > 0) {
        terms.push_back({1, Word(std::vector<grp::Letter>(ls.begin() + i + 1, ls.end())),
                         edges[ls[i].gen]});
      } else {
        terms.push_back({-1, Word(std::vector<grp::Letter>(ls.begin() + i, ls.end())),
                         edges[ls[i].gen]});
      }
    }
    const std::size_t c = cx.add_cell("r" + std::to_string(r + 1), 2);
    cx.set_boundary(c, std::move(terms));
  }
  return cx;
}

} // namespace scx::chain
