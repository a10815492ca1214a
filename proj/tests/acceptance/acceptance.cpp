// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "scx/alex/alex.hpp"
#include "scx/error.hpp"
#include "scx/io/scx_format.hpp"
#include "scx/sutured/sutured.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace scx;
using algebra::Field;
using algebra::LaurentPoly;
using grp::Representation;

namespace {

const Field Q = Field::rationals();

std::string path(const std::string& name) { return std::string(SCX_DATA_DIR) + "/" + name; }
io::ScxDocument doc(const std::string& name) { return io::load_scx(path(name)); }
sutured::SuturedComplex sutured_of(const std::string& name) {
  return sutured::SuturedComplex::from_document(doc(name));
}

const char* const kSutured[] = {"product_T1.scx",        "meridional_solidtorus.scx", "solidtorus_4meridional.scx",
                                "slope2_solidtorus.scx", "annulus_product.scx",       "disk_product.scx",
                                "d3_two_sutures.scx",    "handlebody_twisted.scx"};
const char* const kAll[] = {"product_T1.scx",        "meridional_solidtorus.scx", "solidtorus_4meridional.scx",
                            "slope2_solidtorus.scx", "annulus_product.scx",       "disk_product.scx",
                            "d3_two_sutures.scx",    "handlebody_twisted.scx",    "trefoil.scx",
                            "figure8.scx",           "trefoil_fibered.scx"};

/// Permutation representations of every quotient of degree <= d, plus the trivial one.
std::vector<Representation> reps_up_to(const grp::GroupPresentation& g, std::size_t d) {
  std::vector<Representation> out{Representation::trivial(g, 1, Q)};
  for (const auto& q : grp::enumerate_quotients(g, {d, false, grp::default_threads()}))
    out.push_back(grp::permutation_representation(g, q, Q));
  return out;
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) note << "failed: " << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.pass = false;
    o.note << " (runtime limit " << limit_s << " s exceeded)";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", secs);
  std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " [" << buf << "] " << title;
  const auto note = o.note.str();
  if (!note.empty()) std::cout << " -- " << note;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

bool assoc(const LaurentPoly& p, const std::string& q) { return LaurentPoly::associated(p, LaurentPoly::parse(Q, q)); }

} // namespace

int main() {
  criterion(1, "product pair homology vanishes for all representations", 10, [](Outcome& o) {
    const auto sc = sutured_of("product_T1.scx");
    const auto reps = reps_up_to(sc.m.group(), 4);
    o.require(reps.size() >= 50, "at least 50 representations");
    for (const auto& r : reps) o.require(chain::betti(sc.m, &sc.rminus, r).str() == "(0,0,0,0)", r.describe(sc.m.group()));
    o.note << reps.size() << " representations, all b = (0,0,0,0)";
  });

  criterion(2, "meridional solid torus: b1(M,R-) = k, never 0", 5, [](Outcome& o) {
    const auto sc = sutured_of("meridional_solidtorus.scx");
    const auto reps = reps_up_to(sc.m.group(), 6);
    for (const auto& r : reps) {
      const auto b = chain::betti(sc.m, &sc.rminus, r);
      o.require(b.b[1] == r.dim() && b.b[1] != 0, r.describe(sc.m.group()));
    }
    o.note << reps.size() << " representations (degrees 1..6)";
  });

  criterion(3, "slope-2 solid torus: non-product certificate", 2, [](Outcome& o) {
    const auto sc = sutured_of("slope2_solidtorus.scx");
    const auto& g = sc.m.group();
    const auto b_triv = chain::betti(sc.m, &sc.rminus, Representation::trivial(g, 1, Q)).b[1];
    const auto z2 = grp::make_quotient(g, {grp::Permutation::parse_cycles("(1 2)", 2)}, 2);
    const auto b_reg = chain::betti(sc.m, &sc.rminus, grp::regular_representation(g, z2, Q)).b[1];
    sutured::SearchOptions opts;
    opts.max_degree = 2;
    const auto v = sutured::nonproduct_search(sc, opts);
    const auto ih = chain::integral_homology(sc.m, &sc.rminus);
    o.require(b_triv == 0, "trivial b1 = 0");
    o.require(b_reg == 1, "Z/2 regular b1 = 1");
    o.require(v.status == sutured::Status::CertifiedNotProduct && v.witness && v.witness->test == "index" &&
                  v.witness->quotient && v.witness->quotient->degree == 2,
              "index test at degree 2");
    o.require(ih.free_rank[1] == 0 && ih.torsion[1] == std::vector<mpz_class>{2}, "H1(M,R-;Z) = Z/2");
    o.require(!ih.snf_in[1].empty() && ih.snf_in[1].back() == 2, "SNF diagonal ends in 2");
    o.note << "b1 = " << b_triv << ", " << b_reg << "; index " << v.witness->rminus_order << " < "
           << v.witness->image_order << "; H1 = " << ih.str(1);
  });

  criterion(4, "Euler identity on random triples", 0, [](Outcome& o) {
    std::mt19937 rng(2024);
    std::vector<io::ScxDocument> docs;
    std::vector<std::vector<grp::FiniteQuotient>> qs;
    for (const char* n : kAll) {
      docs.push_back(doc(n));
      qs.push_back(grp::enumerate_quotients(docs.back().complex.group(), {4, false, 1}));
    }
    int tested = 0;
    while (tested < 240) {
      const std::size_t i = rng() % docs.size();
      const auto& d = docs[i];
      const auto& q = qs[i][rng() % qs[i].size()];
      const auto rep = grp::permutation_representation(d.complex.group(), q, Q);
      const std::size_t s = rng() % (d.subcomplexes.size() + 1);
      const chain::SubcomplexRef* y = s < d.subcomplexes.size() ? &d.subcomplexes[s] : nullptr;
      const auto r = chain::euler_check(d.complex, y, rep);
      o.require(r.pass, "Euler identity");
      ++tested;
    }
    o.note << tested << " triples";
  });

  criterion(5, "H0 and H3 vanishing on all bundled pairs", 0, [](Outcome& o) {
    std::size_t checks = 0;
    for (const char* n : kAll) {
      const auto d = doc(n);
      const bool manifold = d.meta_int("manifold", 0) != 0;
      const auto reps = reps_up_to(d.complex.group(), 4);
      for (const auto& s : d.subcomplexes) {
        if (s.cells.empty()) continue;
        for (const auto& r : reps) {
          const auto v = chain::h0_vanishing_check(d.complex, s, r, manifold);
          o.require(v.pass, std::string(n) + " " + s.name + ": " + v.message);
          ++checks;
        }
      }
    }
    o.note << checks << " (pair, representation) checks";
  });

  criterion(6, "duality on the meridional solid torus", 0, [](Outcome& o) {
    const auto sc = sutured_of("meridional_solidtorus.scx");
    const auto y2 = chain::subcomplex_union("R+gamma", sc.rplus, sc.gamma);
    const auto reps = reps_up_to(sc.m.group(), 3);
    for (const auto& r : reps) o.require(chain::duality_check(sc.m, sc.rminus, y2, r).pass, r.describe(sc.m.group()));
    o.note << reps.size() << " representations";
  });

  criterion(7, "complexity bound and tautness of the product", 0, [](Outcome& o) {
    const auto sc = sutured_of("product_T1.scx");
    const auto b = sutured::complexity_lower_bound(sc, Representation::trivial(sc.m.group(), 1, Q));
    o.require(b.bound == 1 && b.sharp && b.chi_minus_rminus == 1 && b.chi_minus_rplus == 1, "x >= 1, sharp");
    const auto v = sutured::certify_taut(sc, {});
    o.require(v.status == sutured::Status::CertifiedTaut && v.witness && v.witness->test == "trivial",
              "certified taut with the trivial representation");
    o.note << "x >= " << b.bound.get_str() << (b.sharp ? " (sharp)" : "");
  });

  criterion(8, "twisted Alexander polynomials and norm bounds", 4, [](Outcome& o) {
    const auto tr = doc("trefoil.scx");
    const auto phi = sutured::CohomologyClass::parse(*tr.meta_value("phi"), tr.complex.group());
    const auto tb = alex::thurston_bound(tr.complex, phi, Representation::trivial(tr.complex.group(), 1, Q));
    o.require(assoc(tb.orders[0].poly, "t - 1"), "trefoil Delta_0");
    o.require(assoc(tb.orders[1].poly, "t^2 - t + 1"), "trefoil Delta_1");
    o.require(assoc(tb.orders[2].poly, "1"), "trefoil Delta_2");
    o.require(tb.bound && *tb.bound == 1, "trefoil bound 1");
    const auto f8 = doc("figure8.scx");
    const auto phi8 = sutured::CohomologyClass::parse(*f8.meta_value("phi"), f8.complex.group());
    const auto tb8 = alex::thurston_bound(f8.complex, phi8, Representation::trivial(f8.complex.group(), 1, Q));
    o.require(assoc(tb8.orders[1].poly, "t^2 - 3*t + 1"), "figure-eight Delta_1");
    o.require(tb8.bound && *tb8.bound == 1, "figure-eight bound 1");
    o.note << "trefoil " << tb.orders[1].poly.str() << ", figure-eight " << tb8.orders[1].poly.str();
  });

  criterion(9, "deg det(A + tB) = s iff det A, det B nonzero", 0, [](Outcome& o) {
    std::mt19937 rng(99);
    std::size_t singular = 0, total = 0;
    for (const Field f : {Q, Field::prime(5)}) {
      for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t s = 1 + rng() % 5;
        auto random_matrix = [&] {
          // Low-rank products make singular matrices common.
          const std::size_t r = rng() % (s + 1);
          std::vector<std::vector<long>> u(s, std::vector<long>(s, 0)), v = u, m = u;
          for (auto& row : u)
            for (std::size_t j = 0; j < r; ++j) row[j] = static_cast<long>(rng() % 9) - 4;
          for (std::size_t i = 0; i < r; ++i)
            for (auto& x : v[i]) x = static_cast<long>(rng() % 9) - 4;
          for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
              for (std::size_t k = 0; k < s; ++k) m[i][j] += u[i][k] * v[k][j];
          return algebra::from_integers(f, m);
        };
        const auto r = alex::detab_property(random_matrix(), random_matrix(), f);
        o.require(r.holds(), "equivalence");
        singular += !r.rhs;
        ++total;
      }
    }
    o.note << total << " pairs, " << singular << " with a singular side";
  });

  criterion(10, "double construction", 0, [](Outcome& o) {
    // Untwisted b1 of the double, from the Mayer-Vietoris oracle.
    const std::pair<const char*, std::size_t> expected[] = {
        {"product_T1.scx", 3},        {"meridional_solidtorus.scx", 3}, {"solidtorus_4meridional.scx", 5},
        {"slope2_solidtorus.scx", 2}, {"annulus_product.scx", 2},       {"disk_product.scx", 1},
        {"d3_two_sutures.scx", 2},    {"handlebody_twisted.scx", 4}};
    static_assert(std::size(expected) == std::size(kSutured));
    std::mt19937 rng(5);
    for (const auto& [name, b1] : expected) {
      const auto d = sutured::double_complex(sutured_of(name));
      const auto& cx = d.document.complex;
      const auto& g = cx.group();
      o.require(cx.euler_characteristic() == 0, std::string(name) + " chi");
      o.require(d.phi.is_cocycle(g), std::string(name) + " cocycle");
      o.require(chain::abelian_boundary_check(cx) == 0, std::string(name) + " abelian d^2");
      auto qs = grp::enumerate_quotients(g, {3, false, 1});
      std::shuffle(qs.begin(), qs.end(), rng);
      qs.resize(std::min<std::size_t>(qs.size(), 10));
      for (const auto& q : qs) {
        try {
          chain::specialize(cx, nullptr, grp::permutation_representation(g, q, Q));
        } catch (const BoundaryError&) {
          o.require(false, std::string(name) + " d^2 under " + q.str(g));
        }
      }
      const auto got = chain::betti(cx, nullptr, Representation::trivial(g, 1, Q)).b[1];
      o.require(got == b1, std::string(name) + " b1(DM) = " + std::to_string(got) + ", expected " +
                               std::to_string(b1));
    }
    o.note << std::size(expected) << " examples";
  });

  criterion(11, "determinant formula on the fibered trefoil", 0, [](Outcome& o) {
    const auto fb = doc("trefoil_fibered.scx");
    const auto phi = sutured::CohomologyClass::parse(*fb.meta_value("phi"), fb.complex.group());
    const auto cut = alex::fibered_cut(fb);
    const auto r = alex::det_form_check(cut, fb.complex, phi, Representation::trivial(cut.x.group(), 1, Q),
                                        Representation::trivial(fb.complex.group(), 1, Q), 1);
    o.require(r.applicable && r.b_r == r.b_x, "b1(R-) = b1(X-)");
    o.require(r.match, "det agrees with Delta_1");
    o.note << "b1 = " << r.b_r << "; det = " << r.det.str() << ", Delta_1 = " << r.alexander.poly.str();
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
