#include "corpus.hpp"

#include "scx/alex/alex.hpp"
#include "scx/error.hpp"

#include <doctest.h>

#include <random>

using namespace scx;
using namespace scx::alex;
using algebra::Field;

namespace {

const Field Q = Field::rationals();

struct Loaded {
  io::ScxDocument doc;
  CohomologyClass phi;
};

Loaded load_with_phi(const std::string& name) {
  Loaded l{load_doc(name), {}};
  l.phi = CohomologyClass::parse(*l.doc.meta_value("phi"), l.doc.complex.group());
  return l;
}

LaurentPoly lp(const std::string& s, Field f = Q) { return LaurentPoly::parse(f, s); }

bool same(const LaurentPoly& a, const std::string& b) { return LaurentPoly::associated(a, lp(b)); }

} // namespace

// Expected values come from the Fox-calculus oracle (tests/oracles/fox_oracle.py).
TEST_CASE("trefoil and figure-eight orders") {
  const auto tr = load_with_phi("trefoil.scx");
  const auto rep = Representation::trivial(tr.doc.complex.group(), 1, Q);
  const auto d0 = twisted_alexander(tr.doc.complex, tr.phi, rep, 0);
  const auto d1 = twisted_alexander(tr.doc.complex, tr.phi, rep, 1);
  const auto d2 = twisted_alexander(tr.doc.complex, tr.phi, rep, 2);
  CHECK(same(d0.poly, "t - 1"));
  CHECK(d1.str() == "Delta_1 = 1 - t + t^2");
  CHECK(d1.deg == 2);
  CHECK(d2.poly.str() == "1");
  CHECK(d2.deg == 0);
  const auto tb = thurston_bound(tr.doc.complex, tr.phi, rep);
  REQUIRE(tb.bound);
  CHECK(*tb.bound == 1);

  const auto f8 = load_with_phi("figure8.scx");
  const auto r8 = Representation::trivial(f8.doc.complex.group(), 1, Q);
  CHECK(twisted_alexander(f8.doc.complex, f8.phi, r8, 1).poly.str() == "1 - 3*t + t^2");
  const auto tb8 = thurston_bound(f8.doc.complex, f8.phi, r8);
  REQUIRE(tb8.bound);
  CHECK(*tb8.bound == 1);
}

TEST_CASE("fibered trefoil orders agree with the knot group presentation") {
  const auto fb = load_with_phi("trefoil_fibered.scx");
  const auto rep = Representation::trivial(fb.doc.complex.group(), 1, Q);
  CHECK(same(twisted_alexander(fb.doc.complex, fb.phi, rep, 0).poly, "t - 1"));
  CHECK(same(twisted_alexander(fb.doc.complex, fb.phi, rep, 1).poly, "t^2 - t + 1"));
}

TEST_CASE("circle complex") {
  grp::GroupPresentation g({"x"}, {});
  const auto cx = chain::presentation_complex(g);
  const CohomologyClass phi{{1}};
  const auto rep = Representation::trivial(g, 1, Q);
  CHECK(same(twisted_alexander(cx, phi, rep, 0).poly, "t - 1"));
  CHECK(twisted_alexander(cx, phi, rep, 1).poly.str() == "1");
  const auto tb = thurston_bound(cx, phi, rep);
  REQUIRE(tb.bound);
  CHECK(*tb.bound == 0);
  CHECK(tb.floored);
}

TEST_CASE("zero class gives zero orders where homology has rank") {
  const auto tr = load_with_phi("trefoil.scx");
  const CohomologyClass zero{{0, 0}};
  const auto rep = Representation::trivial(tr.doc.complex.group(), 1, Q);
  const auto d0 = twisted_alexander(tr.doc.complex, zero, rep, 0);
  CHECK(d0.poly.is_zero());
  CHECK_FALSE(d0.deg);
  CHECK(twisted_alexander(tr.doc.complex, zero, rep, 1).poly.is_zero());
  const auto tb = thurston_bound(tr.doc.complex, zero, rep);
  CHECK_FALSE(tb.bound);
  CHECK(tb.note.find("= 0") != std::string::npos);
  CHECK_THROWS_AS(twisted_alexander(tr.doc.complex, CohomologyClass{{1, 0}}, rep, 1), InputError);
}

TEST_CASE("orders are invariant under cell order and conjugation") {
  const auto tr = load_with_phi("figure8.scx");
  const auto& cx = tr.doc.complex;
  const auto& g = cx.group();
  for (const auto& q : grp::enumerate_quotients(g, {3, false, 1})) {
    const auto rep = grp::permutation_representation(g, q, Q);
    const auto ref = twisted_alexander(cx, tr.phi, rep, 1).poly;
    const auto perm = chain::permute_cells(cx, {3, 1, 0, 2});
    CHECK(twisted_alexander(perm, tr.phi, rep, 1).poly == ref);
    // Conjugate by a fixed invertible matrix.
    const std::size_t k = rep.dim();
    auto c = algebra::identity(Q, k);
    for (std::size_t i = 0; i + 1 < k; ++i) c(i, i + 1) = algebra::Scalar(Q, 2);
    const auto ci = algebra::inverse(c, Q);
    std::vector<algebra::FieldMatrix> mats;
    for (std::size_t j = 0; j < g.generator_count(); ++j)
      mats.push_back(c.multiply(rep.image(j), algebra::Scalar::zero(Q)).multiply(ci, algebra::Scalar::zero(Q)));
    const auto conj = Representation::from_matrices(g, mats, Q, false);
    CHECK(twisted_alexander(cx, tr.phi, conj, 1).poly == ref);
  }
}

TEST_CASE("twisted bounds never go negative on the knot complexes") {
  for (const char* name : {"trefoil.scx", "figure8.scx", "trefoil_fibered.scx"}) {
    const auto l = load_with_phi(name);
    const auto& g = l.doc.complex.group();
    for (const auto& q : grp::enumerate_quotients(g, {3, false, 1})) {
      const auto tb = thurston_bound(l.doc.complex, l.phi, grp::permutation_representation(g, q, Q));
      if (tb.bound) CHECK(*tb.bound >= 0);
    }
  }
}

TEST_CASE("determinant formula on the fibered trefoil") {
  const auto fb = load_with_phi("trefoil_fibered.scx");
  const auto cut = fibered_cut(fb.doc);
  CHECK(cut.r.size() == 3);
  CHECK(cut.x.size() == 9);
  const auto rep_x = Representation::trivial(cut.x.group(), 1, Q);
  const auto rep_w = Representation::trivial(fb.doc.complex.group(), 1, Q);
  const auto r1 = det_form_check(cut, fb.doc.complex, fb.phi, rep_x, rep_w, 1);
  CHECK(r1.applicable);
  CHECK(r1.b_r == 2);
  CHECK(r1.b_x == 2);
  CHECK(same(r1.det, "t^2 - t + 1"));
  CHECK(r1.match);
  const auto r0 = det_form_check(cut, fb.doc.complex, fb.phi, rep_x, rep_w, 0);
  CHECK(r0.applicable);
  CHECK(same(r0.det, "1 - t"));
  CHECK(r0.match);
  const auto r2 = det_form_check(cut, fb.doc.complex, fb.phi, rep_x, rep_w, 2);
  CHECK(r2.applicable);
  CHECK(r2.det.str() == "1");
  CHECK(r2.match);
  // A nontrivial representation that does not commute with the monodromy.
  const auto q = grp::make_quotient(cut.x.group(), {grp::Permutation::parse_cycles("(1 2)", 2),
                                                    grp::Permutation::parse_cycles("()", 2)}, 2);
  const auto bad = det_form_check(cut, fb.doc.complex, fb.phi,
                                  grp::permutation_representation(cut.x.group(), q, Q), rep_w, 1);
  CHECK_FALSE(bad.applicable);
}

TEST_CASE("product cut: identity maps give (1 - t)^r") {
  io::ScxDocument doc = load_doc("trefoil_fibered.scx");
  doc.set_meta("monodromy", "a=a b=b");
  const auto cut = fibered_cut(doc);
  const auto rep = Representation::trivial(cut.x.group(), 1, Q);
  const auto rep_w = Representation::trivial(doc.complex.group(), 1, Q);
  const CohomologyClass phi{{0, 0, 1}};
  const auto r = det_form_check(cut, doc.complex, phi, rep, rep_w, 1);
  CHECK(same(r.det, "1 - 2*t + t^2"));
  CHECK_FALSE(r.match); // W still carries the trefoil monodromy
}

TEST_CASE("degree of det(A + tB)") {
  auto m = [](std::vector<std::vector<long>> rows) { return algebra::from_integers(Q, rows); };
  auto r = detab_property(m({{1}}), m({{1}}), Q);
  CHECK(r.degree == 1);
  CHECK(r.lhs);
  CHECK(r.holds());
  r = detab_property(m({{1, 0}, {0, 0}}), m({{1, 0}, {0, 1}}), Q);
  CHECK(r.degree == 1);
  CHECK_FALSE(r.det_a_nonzero);
  CHECK(r.holds());
  r = detab_property(m({{1}}), m({{0}}), Q);
  CHECK(r.degree == 0);
  CHECK_FALSE(r.det_b_nonzero);
  CHECK(r.holds());
  CHECK_THROWS_AS(detab_property(m({{1}}), m({{1, 0}, {0, 1}}), Q), InputError);
}

TEST_CASE("degree equivalence on random pairs") {
  std::mt19937 rng(19);
  for (const Field f : {Q, Field::prime(5)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t s = 1 + rng() % 5;
      std::vector<std::vector<long>> a(s, std::vector<long>(s)), b = a;
      const int sparsity = rng() % 3;
      for (auto* mat : {&a, &b})
        for (auto& row : *mat)
          for (auto& v : row) v = (static_cast<int>(rng() % 3) < sparsity) ? 0 : static_cast<long>(rng() % 7) - 3;
      const auto r = detab_property(algebra::from_integers(f, a), algebra::from_integers(f, b), f);
      CHECK(r.holds());
    }
  }
}
