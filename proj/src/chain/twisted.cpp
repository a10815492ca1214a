#include "scx/chain/twisted.hpp"

#include <map>
#include <sstream>

namespace scx::chain {

using algebra::Scalar;

TwistedComplex specialize(const EquivariantComplex& cx, const SubcomplexRef* y,
                          const Representation& rep) {
  if (rep.generator_count() != cx.group().generator_count())
    throw InputError("representation has " + std::to_string(rep.generator_count()) +
                     " generators, complex group has " +
                     std::to_string(cx.group().generator_count()));
  if (y) require_closed(cx, *y);
  const Field f = rep.field();
  std::map<Word, FieldMatrix> cache;
  return assemble<Scalar>(
      cx, y, rep.dim(), Scalar::zero(f), [f](long c) { return Scalar(f, c); },
      [&](const Word& w) -> FieldMatrix {
        auto it = cache.find(w);
        if (it == cache.end()) it = cache.emplace(w, rep.eval(w)).first;
        return it->second;
      });
}

LaurentComplex specialize_laurent(const EquivariantComplex& cx, const SubcomplexRef* y,
                                  const Representation& rep, const std::vector<long>& phi) {
  if (rep.generator_count() != cx.group().generator_count() ||
      phi.size() != cx.group().generator_count())
    throw InputError("representation or class does not match the complex group");
  if (y) require_closed(cx, *y);
  const Field f = rep.field();
  return assemble<LaurentPoly>(
      cx, y, rep.dim(), LaurentPoly(f), [f](long c) { return LaurentPoly::constant(f, c); },
      [&](const Word& w) {
        long e = 0;
        for (const auto& l : w.letters()) e += l.exp * phi[l.gen];
        const FieldMatrix m = rep.eval(w);
        Matrix<LaurentPoly> out(m.rows(), m.cols(), LaurentPoly(f));
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out(i, j) = LaurentPoly::monomial(m(i, j), static_cast<int>(e));
        return out;
      });
}

std::string BettiVector::str() const {
  std::ostringstream os;
  os << "(" << b[0] << "," << b[1] << "," << b[2] << "," << b[3] << ")";
  return os.str();
}

std::array<std::size_t, 5> boundary_ranks(const TwistedComplex& tc) {
  std::array<std::size_t, 5> r{};
  for (int i = 1; i <= 3; ++i) r[i] = algebra::rank(tc.d[i]);
  return r;
}

BettiVector betti(const TwistedComplex& tc, Field f) {
  const auto r = boundary_ranks(tc);
  BettiVector bv;
  bv.field = f;
  bv.k = tc.k;
  long chi = 0;
  for (int i = 0; i <= 3; ++i) {
    bv.b[i] = tc.rank_of(i) - r[i] - r[i + 1];
    chi += (i % 2 ? -1 : 1) * static_cast<long>(tc.rank_of(i));
  }
  if (bv.alternating_sum() != chi) throw Error("internal: Euler identity violated");
  return bv;
}

BettiVector betti(const EquivariantComplex& cx, const SubcomplexRef* y,
                  const Representation& rep) {
  return betti(specialize(cx, y, rep), rep.field());
}

EulerReport euler_check(const EquivariantComplex& cx, const SubcomplexRef* y,
                        const Representation& rep) {
  EulerReport r;
  // Alternating sum of Betti numbers, computed from ranks (not from cell counts).
  const auto tc = specialize(cx, y, rep);
  const auto ranks = boundary_ranks(tc);
  for (int i = 0; i <= 3; ++i) {
    const long b = static_cast<long>(tc.rank_of(i) - ranks[i] - ranks[i + 1]);
    r.alternating += i % 2 ? -b : b;
  }
  r.expected = static_cast<long>(rep.dim()) * euler_characteristic(cx, y);
  r.pass = r.alternating == r.expected;
  return r;
}

VanishingReport h0_vanishing_check(const EquivariantComplex& cx, const SubcomplexRef& y,
                                   const Representation& rep, bool three_manifold) {
  VanishingReport r;
  if (!one_skeleton_connected(cx)) {
    r.message = "1-skeleton is not connected";
    return r;
  }
  if (y.cells.empty()) {
    r.message = "subcomplex '" + y.name + "' is empty";
    return r;
  }
  const auto bv = betti(cx, &y, rep);
  r.b0 = bv.b[0];
  r.b3 = bv.b[3];
  r.b3_checked = three_manifold;
  r.pass = r.b0 == 0 && (!three_manifold || r.b3 == 0);
  if (r.b0 != 0) r.message = "b0 = " + std::to_string(r.b0) + " for a nonempty subcomplex";
  else if (three_manifold && r.b3 != 0) r.message = "b3 = " + std::to_string(r.b3);
  else r.message = "ok";
  return r;
}

DualityReport duality_check(const EquivariantComplex& cx, const SubcomplexRef& y1,
                            const SubcomplexRef& y2, const Representation& rep) {
  DualityReport r;
  const auto a = betti(cx, &y1, rep);
  const auto b = betti(cx, &y2, grp::dagger(rep));
  r.pass = true;
  for (int i = 0; i <= 3; ++i) {
    r.lhs[i] = a.b[3 - i];
    r.rhs[i] = b.b[i];
    if (r.lhs[i] != r.rhs[i]) r.pass = false;
  }
  return r;
}

namespace {

std::vector<std::size_t> coords(const TwistedComplex& tc, int dim, const SubcomplexRef& y,
                                bool inside) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < tc.cells[dim].size(); ++p)
    if (y.contains(tc.cells[dim][p]) == inside)
      for (std::size_t j = 0; j < tc.k; ++j) out.push_back(p * tc.k + j);
  return out;
}

std::vector<std::size_t> all_of(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

/// rank [a | b] - rank b
std::size_t rank_mod(const FieldMatrix& a, const FieldMatrix& b, Field f) {
  return algebra::rank(algebra::hconcat(a, b, Scalar::zero(f))) - algebra::rank(b);
}

} // namespace

LesReport les_check(const EquivariantComplex& cx, const SubcomplexRef& y,
                    const Representation& rep) {
  const Field f = rep.field();
  const Scalar zero = Scalar::zero(f);
  LesReport r;
  r.sub = betti(restrict_to(cx, y), nullptr, rep);
  const auto tx = specialize(cx, nullptr, rep);
  r.whole = betti(tx, f);
  r.pair = betti(cx, &y, rep);

  auto dmat = [&](int i) -> const FieldMatrix& { return tx.d[i]; };
  auto boundary_span = [&](int i) { // B_i(X) inside C_i(X)
    if (i == 3) return algebra::zeros(f, tx.rank_of(3), 0);
    return dmat(i + 1);
  };
  for (int i = 0; i <= 3; ++i) {
    const auto yin = coords(tx, i, y, true), yout = coords(tx, i, y, false);
    const auto all_i = all_of(tx.rank_of(i));
    // Z_i(Y) in C_i(X)
    FieldMatrix zy_small = algebra::kernel_basis(
        i == 0 ? algebra::zeros(f, 0, yin.size()) : dmat(i).submatrix(all_of(tx.rank_of(i - 1)), yin, zero),
        f);
    FieldMatrix zy = algebra::zeros(f, tx.rank_of(i), zy_small.cols());
    for (std::size_t a = 0; a < yin.size(); ++a)
      for (std::size_t c = 0; c < zy_small.cols(); ++c) zy(yin[a], c) = zy_small(a, c);
    const FieldMatrix bx = boundary_span(i);
    r.inclusion[i] = rank_mod(zy, bx, f);

    // H_i(X) -> H_i(X, Y): project cycles away from Y
    const FieldMatrix zx = algebra::kernel_basis(i == 0 ? algebra::zeros(f, 0, tx.rank_of(0)) : dmat(i), f);
    const FieldMatrix pz = zx.submatrix(yout, all_of(zx.cols()), zero);
    const FieldMatrix pb = bx.submatrix(yout, all_of(bx.cols()), zero);
    r.projection[i] = rank_mod(pz, pb, f);

    // H_i(X, Y) -> H_{i-1}(Y)
    if (i == 0) {
      r.connecting[i] = 0;
      continue;
    }
    const auto yin_lo = coords(tx, i - 1, y, true), yout_lo = coords(tx, i - 1, y, false);
    const FieldMatrix rel = dmat(i).submatrix(yout_lo, yout, zero);
    const FieldMatrix zrel = algebra::kernel_basis(rel, f);
    FieldMatrix lift = algebra::zeros(f, tx.rank_of(i), zrel.cols());
    for (std::size_t a = 0; a < yout.size(); ++a)
      for (std::size_t c = 0; c < zrel.cols(); ++c) lift(yout[a], c) = zrel(a, c);
    const FieldMatrix dl = dmat(i).multiply(lift, zero).submatrix(yin_lo, all_of(lift.cols()), zero);
    // B_{i-1}(Y): boundaries of Y-cells of dimension i
    const FieldMatrix by = dmat(i).submatrix(yin_lo, yin, zero);
    r.connecting[i] = rank_mod(dl, by, f);
  }
  r.exact = true;
  for (int i = 0; i <= 3; ++i) {
    const std::size_t next_conn = i < 3 ? r.connecting[i + 1] : 0;
    if (r.sub.b[i] != next_conn + r.inclusion[i]) r.exact = false;
    if (r.whole.b[i] != r.inclusion[i] + r.projection[i]) r.exact = false;
    if (r.pair.b[i] != r.projection[i] + r.connecting[i]) r.exact = false;
    r.alternating += (i % 2 ? -1 : 1) *
                     (static_cast<long>(r.sub.b[i]) - static_cast<long>(r.whole.b[i]) +
                      static_cast<long>(r.pair.b[i]));
  }
  if (r.alternating != 0) r.exact = false;
  return r;
}

} // namespace scx::chain
