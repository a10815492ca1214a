#include "scx/alex/alex.hpp"

#include "scx/error.hpp"

#include <sstream>

namespace scx::alex {

using algebra::Field;
using algebra::PolyMatrix;
using algebra::Scalar;
using chain::BoundaryTerm;
using grp::Letter;
using grp::Word;

std::string AlexOrder::str() const { return "Delta_" + std::to_string(i) + " = " + poly.str(); }

AlexOrder twisted_alexander(const EquivariantComplex& cx, const CohomologyClass& phi,
                            const Representation& rep, int i) {
  if (i < 0 || i > 3) throw InputError("homology degree must be 0..3");
  if (!phi.is_cocycle(cx.group())) throw InputError("phi does not vanish on every relator");
  const Field f = rep.field();
  const auto lc = chain::specialize_laurent(cx, nullptr, rep, phi.values);
  const PolyMatrix d_in = i < 3 ? lc.d[i + 1] : algebra::poly_zeros(f, lc.rank_of(3), 0);
  AlexOrder out;
  out.i = i;
  out.poly = algebra::pid_homology_order(d_in, lc.d[i], f);
  out.deg = out.poly.degree();
  return out;
}

ThurstonBound thurston_bound(const EquivariantComplex& cx, const CohomologyClass& phi,
                             const Representation& rep) {
  ThurstonBound tb;
  tb.k = rep.dim();
  for (int i = 0; i < 3; ++i) tb.orders[i] = twisted_alexander(cx, phi, rep, i);
  for (const auto& o : tb.orders)
    if (!o.deg) {
      tb.note = "no bound (Delta_" + std::to_string(o.i) + " = 0)";
      return tb;
    }
  mpq_class b(*tb.orders[1].deg - *tb.orders[0].deg - *tb.orders[2].deg, static_cast<long>(tb.k));
  b.canonicalize();
  if (b < 0) {
    b = 0;
    tb.floored = true;
  }
  tb.bound = b;
  tb.note = "lower bound for the Thurston norm of phi";
  return tb;
}

namespace {

std::vector<BoundaryTerm> word_chain(const Word& w, const std::vector<std::size_t>& edge_of) {
  std::vector<BoundaryTerm> out;
  const auto& ls = w.letters();
  for (std::size_t j = 0; j < ls.size(); ++j) {
    const std::size_t from = ls[j].exp > 0 ? j + 1 : j;
    Word suffix(std::vector<Letter>(ls.begin() + static_cast<long>(from), ls.end()));
    out.push_back({ls[j].exp > 0 ? 1 : -1, suffix, edge_of.at(ls[j].gen)});
  }
  return out;
}

} // namespace

CutData fibered_cut(const io::ScxDocument& doc) {
  const auto& g = doc.complex.group();
  const auto phi_text = doc.meta_value("phi");
  const auto mono_text = doc.meta_value("monodromy");
  if (!phi_text || !mono_text) throw InputError("fibered cut needs 'phi' and 'monodromy' metadata");
  const auto phi = CohomologyClass::parse(*phi_text, g);
  std::vector<std::string> fiber;
  std::size_t stable = 0, stable_count = 0;
  for (std::size_t i = 0; i < g.generator_count(); ++i) {
    if (phi.values[i] == 0) {
      fiber.push_back(g.generators()[i]);
    } else if (phi.values[i] == 1) {
      stable = i;
      ++stable_count;
    } else {
      throw InputError("phi must take values 0 and 1 only");
    }
  }
  if (stable_count != 1) throw InputError("phi must have exactly one stable letter");
  (void)stable;

  const grp::GroupPresentation fg(fiber, {});
  std::vector<Word> mono(fiber.size());
  std::vector<bool> seen(fiber.size(), false);
  std::istringstream is(*mono_text);
  std::string item;
  while (is >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("monodromy entry '" + item + "' lacks '='");
    const auto idx = fg.index_of(item.substr(0, eq));
    if (!idx) throw InputError("monodromy names unknown fiber generator '" + item.substr(0, eq) + "'");
    mono[*idx] = fg.parse_word(item.substr(eq + 1));
    seen[*idx] = true;
  }
  for (std::size_t i = 0; i < fiber.size(); ++i)
    if (!seen[i]) throw InputError("monodromy missing for '" + fiber[i] + "'");

  CutData cut;
  cut.r = chain::presentation_complex(fg);
  auto& x = cut.x;
  x = EquivariantComplex(fg);
  const auto vm = x.add_cell("v-", 0), vp = x.add_cell("v+", 0);
  const auto vi = x.add_cell("vI", 1);
  x.set_boundary(vi, {{1, Word(), vp}, {-1, Word(), vm}});
  std::vector<std::size_t> lower, upper;
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    lower.push_back(x.add_cell(fiber[i] + "-", 1));
    upper.push_back(x.add_cell(fiber[i] + "+", 1));
    x.set_boundary(lower.back(), {{1, Word::generator(i), vm}, {-1, Word(), vm}});
    x.set_boundary(upper.back(), {{1, Word::generator(i), vp}, {-1, Word(), vp}});
  }
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    const auto sq = x.add_cell(fiber[i] + "I", 2);
    x.set_boundary(sq, {{1, Word(), lower[i]},
                        {1, Word::generator(i), vi},
                        {-1, Word(), upper[i]},
                        {-1, Word(), vi}});
  }
  cut.left.images.resize(cut.r.size());
  cut.right.images.resize(cut.r.size());
  cut.left.images[cut.r.index("v")] = {{1, Word(), vm}};
  cut.right.images[cut.r.index("v")] = {{1, Word(), vp}};
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    const auto e = cut.r.index("e_" + fiber[i]);
    cut.left.images[e] = {{1, Word(), lower[i]}};
    cut.right.images[e] = word_chain(mono[i], upper);
    cut.left_hom.push_back(Word::generator(i));
    cut.right_hom.push_back(mono[i]);
  }
  return cut;
}

DetFormReport det_form_check(const CutData& cut, const EquivariantComplex& w, const CohomologyClass& phi,
                             const Representation& rep_x, const Representation& rep_w, int i) {
  DetFormReport rep;
  rep.i = i;
  const Field f = rep_x.field();
  rep.alexander = twisted_alexander(w, phi, rep_w, i);
  std::vector<algebra::FieldMatrix> mats;
  for (std::size_t g = 0; g < cut.left_hom.size(); ++g) {
    auto a = rep_x.eval(cut.left_hom[g]);
    if (!(a == rep_x.eval(cut.right_hom[g]))) {
      rep.reason = "representation differs on the two copies of R";
      return rep;
    }
    mats.push_back(std::move(a));
  }
  const auto rep_r = Representation::from_matrices(cut.r.group(), mats, f, rep_x.unitary());
  rep.b_r = chain::betti(cut.r, nullptr, rep_r).b[i];
  rep.b_x = chain::betti(cut.x, nullptr, rep_x).b[i];
  if (rep.b_r != rep.b_x) {
    rep.reason = "formula inapplicable: b_" + std::to_string(i) + "(R) = " + std::to_string(rep.b_r) +
                 " but b_" + std::to_string(i) + "(X) = " + std::to_string(rep.b_x);
    return rep;
  }
  rep.applicable = true;
  const chain::MapSide src{&cut.r, nullptr, &rep_r}, dst{&cut.x, nullptr, &rep_x};
  const auto l = chain::induced_map(src, dst, cut.left, i);
  const auto r = chain::induced_map(src, dst, cut.right, i);
  PolyMatrix m = algebra::poly_zeros(f, l.rows(), l.cols());
  for (std::size_t a = 0; a < l.rows(); ++a)
    for (std::size_t b = 0; b < l.cols(); ++b)
      m(a, b) = LaurentPoly::constant(l(a, b)) - LaurentPoly::monomial(r(a, b), 1);
  rep.det = m.rows() == 0 ? LaurentPoly::constant(f, 1) : algebra::det_poly(m, f).canonical();
  rep.match = LaurentPoly::associated(rep.det, rep.alexander.poly);
  return rep;
}

DetAbReport detab_property(const algebra::FieldMatrix& a, const algebra::FieldMatrix& b, Field f) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw InputError("detab_property needs square matrices of equal size");
  DetAbReport out;
  out.size = a.rows();
  PolyMatrix m = algebra::poly_zeros(f, out.size, out.size);
  for (std::size_t i = 0; i < out.size; ++i)
    for (std::size_t j = 0; j < out.size; ++j)
      m(i, j) = LaurentPoly::constant(a(i, j)) + LaurentPoly::monomial(b(i, j), 1);
  const auto d = out.size == 0 ? LaurentPoly::constant(f, 1) : algebra::det_poly(m, f);
  out.degree = d.degree();
  out.det_a_nonzero = out.size == 0 || !algebra::determinant(a, f).is_zero();
  out.det_b_nonzero = out.size == 0 || !algebra::determinant(b, f).is_zero();
  out.lhs = out.degree && static_cast<std::size_t>(*out.degree) == out.size;
  out.rhs = out.det_a_nonzero && out.det_b_nonzero;
  return out;
}

} // namespace scx::alex
