#include "scx/chain/homology.hpp"

#include "scx/algebra/smith.hpp"

#include <numeric>
#include <sstream>

namespace scx::chain {

using algebra::Scalar;

namespace {

std::vector<std::size_t> iota_n(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

FieldMatrix column(const FieldMatrix& m, std::size_t c, Field f) {
  return m.submatrix(iota_n(m.rows()), {c}, Scalar::zero(f));
}

} // namespace

HomologyBasis homology_basis(const TwistedComplex& tc, int i, Field f) {
  const Scalar zero = Scalar::zero(f);
  const std::size_t n = tc.rank_of(i);
  const FieldMatrix z =
      algebra::kernel_basis(i == 0 ? algebra::zeros(f, 0, n) : tc.d[i], f);
  HomologyBasis h;
  h.boundaries = i == 3 ? algebra::zeros(f, n, 0) : tc.d[i + 1];
  h.cycles = algebra::zeros(f, n, 0);
  std::size_t current = algebra::rank(h.boundaries);
  FieldMatrix span = h.boundaries;
  for (std::size_t c = 0; c < z.cols(); ++c) {
    const FieldMatrix col = column(z, c, f);
    FieldMatrix trial = algebra::hconcat(span, col, zero);
    const std::size_t r = algebra::rank(trial);
    if (r > current) {
      current = r;
      span = std::move(trial);
      h.cycles = algebra::hconcat(h.cycles, col, zero);
    }
  }
  return h;
}

FieldMatrix homology_coordinates(const HomologyBasis& h, const FieldMatrix& z, Field f) {
  const Scalar zero = Scalar::zero(f);
  const FieldMatrix sys = algebra::hconcat(h.cycles, h.boundaries, zero);
  const auto sol = algebra::solve(sys, z, f);
  if (!sol) throw Error("chain is not a cycle combination");
  return sol->submatrix(iota_n(h.cycles.cols()), iota_n(z.cols()), zero);
}

ChainMap inclusion_map(const EquivariantComplex& sub, const EquivariantComplex& whole) {
  ChainMap m;
  for (const auto& c : sub.cells()) m.images.push_back({{1, Word(), whole.index(c.name)}});
  return m;
}

namespace {

/// Matrix of the degree-i component of the chain map between relative complexes.
FieldMatrix chain_block(const MapSide& a, const TwistedComplex& ta, const MapSide& b,
                        const TwistedComplex& tb, const ChainMap& f, int i) {
  const Field fld = b.rep->field();
  const std::size_t k = tb.k;
  std::vector<long> pos(b.cx->size(), -1);
  for (std::size_t p = 0; p < tb.cells[i].size(); ++p) pos[tb.cells[i][p]] = static_cast<long>(p);
  FieldMatrix m = algebra::zeros(fld, tb.rank_of(i), ta.rank_of(i));
  for (std::size_t j = 0; j < ta.cells[i].size(); ++j)
    for (const auto& t : f.images.at(ta.cells[i][j])) {
      if (b.cx->cell(t.cell).dim != i) throw Error("chain map changes dimension");
      if (pos[t.cell] < 0) continue; // lands in the relative part
      m.add_block(static_cast<std::size_t>(pos[t.cell]) * k, j * k, b.rep->eval(t.word),
                  Scalar(fld, t.coeff));
    }
  return m;
}

} // namespace

FieldMatrix induced_map(const MapSide& a, const MapSide& b, const ChainMap& f, int degree) {
  if (degree < 0 || degree > 3) throw InputError("degree outside 0..3");
  if (f.images.size() != a.cx->size()) throw InputError("chain map must cover every source cell");
  if (a.rep->dim() != b.rep->dim() || !(a.rep->field() == b.rep->field()))
    throw InputError("representations differ in dimension or field");
  const Field fld = b.rep->field();
  const Scalar zero = Scalar::zero(fld);
  const auto ta = specialize(*a.cx, a.rel, *a.rep);
  const auto tb = specialize(*b.cx, b.rel, *b.rep);
  std::array<FieldMatrix, 4> F;
  for (int i = 0; i <= 3; ++i) F[i] = chain_block(a, ta, b, tb, f, i);
  for (int i = 1; i <= 3; ++i)
    if (!(tb.d[i].multiply(F[i], zero) == F[i - 1].multiply(ta.d[i], zero)))
      throw Error("cell map is not a chain map under the representation (degree " +
                  std::to_string(i) + ")");
  const auto ha = homology_basis(ta, degree, fld);
  const auto hb = homology_basis(tb, degree, fld);
  return homology_coordinates(hb, F[degree].multiply(ha.cycles, zero), fld);
}

std::string IntegralHomology::str(int i) const {
  std::ostringstream os;
  bool any = false;
  if (free_rank[i] > 0) {
    os << "Z" << (free_rank[i] > 1 ? "^" + std::to_string(free_rank[i]) : "");
    any = true;
  }
  for (const auto& t : torsion[i]) {
    os << (any ? " + " : "") << "Z/" << t.get_str();
    any = true;
  }
  return any ? os.str() : "0";
}

IntegralHomology integral_homology(const EquivariantComplex& cx, const SubcomplexRef* y) {
  if (y) require_closed(cx, *y);
  std::array<std::vector<std::size_t>, 4> cells;
  std::vector<std::size_t> pos(cx.size(), 0);
  for (int d = 0; d <= 3; ++d)
    for (auto c : cx.cells_of_dim(d))
      if (!y || !y->contains(c)) {
        pos[c] = cells[d].size();
        cells[d].push_back(c);
      }
  std::array<algebra::IntegerSmith, 5> snf;
  for (int d = 1; d <= 3; ++d) {
    algebra::Matrix<mpz_class> m(cells[d - 1].size(), cells[d].size(), 0);
    for (std::size_t j = 0; j < cells[d].size(); ++j)
      for (const auto& t : cx.cell(cells[d][j]).boundary)
        if (!y || !y->contains(t.cell)) m(pos[t.cell], j) += t.coeff;
    snf[d] = algebra::snf_integers(m);
  }
  IntegralHomology h;
  for (int i = 0; i <= 3; ++i) {
    const std::size_t in = i < 3 ? snf[i + 1].rank : 0;
    h.free_rank[i] = cells[i].size() - snf[i].rank - in;
    if (i < 3) {
      h.snf_in[i] = snf[i + 1].diagonal;
      for (const auto& dv : snf[i + 1].diagonal)
        if (dv > 1) h.torsion[i].push_back(dv);
    }
  }
  return h;
}

std::vector<std::vector<long>> abelianization_map(const GroupPresentation& g) {
  const Field q = Field::rationals();
  const std::size_t n = g.generator_count();
  FieldMatrix rel = algebra::zeros(q, g.relators().size(), n);
  for (std::size_t r = 0; r < g.relators().size(); ++r)
    for (std::size_t j = 0; j < n; ++j) rel(r, j) = Scalar(q, g.relators()[r].exponent_sum(j));
  const FieldMatrix ker = algebra::kernel_basis(rel, q);
  std::vector<std::vector<long>> out(n, std::vector<long>(ker.cols(), 0));
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class den = ker(j, c).rational().get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class v = ker(j, c).rational() * lcm;
      out[j][c] = v.get_num().get_si();
    }
  }
  return out;
}

std::size_t abelian_rank(const GroupPresentation& g) {
  return abelianization_map(g).empty() ? 0 : abelianization_map(g).front().size();
}

namespace {

/// Element of Z[Z^r]: exponent vector -> coefficient.
using Multi = std::map<std::vector<long>, mpz_class>;

void add_term(Multi& m, const std::vector<long>& e, const mpz_class& c) {
  auto& slot = m[e];
  slot += c;
  if (slot == 0) m.erase(e);
}

} // namespace

int abelian_boundary_check(const EquivariantComplex& cx) {
  const auto ab = abelianization_map(cx.group());
  const std::size_t r = ab.empty() ? 0 : ab.front().size();
  auto image = [&](const Word& w) {
    std::vector<long> e(r, 0);
    for (const auto& l : w.letters())
      for (std::size_t c = 0; c < r; ++c) e[c] += l.exp * ab[l.gen][c];
    return e;
  };
  // boundary of each cell as a map target -> Multi
  for (std::size_t c = 0; c < cx.size(); ++c) {
    const Cell& cell = cx.cell(c);
    if (cell.dim < 2) continue;
    std::map<std::size_t, Multi> total;
    for (const auto& t : cell.boundary) {
      const auto e1 = image(t.word);
      for (const auto& s : cx.cell(t.cell).boundary) {
        auto e = image(s.word);
        for (std::size_t q = 0; q < r; ++q) e[q] += e1[q];
        add_term(total[s.cell], e, mpz_class(t.coeff) * s.coeff);
      }
    }
    for (const auto& [target, poly] : total)
      if (!poly.empty()) return cell.dim;
  }
  return 0;
}

} // namespace scx::chain
