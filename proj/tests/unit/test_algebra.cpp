#include "scx/algebra/linalg.hpp"
#include "scx/algebra/pid.hpp"
#include "scx/algebra/smith.hpp"

#include <doctest.h>

#include <random>

using namespace scx::algebra;

namespace {

const Field Q = Field::rationals();

LaurentPoly lp(const std::string& s, Field f = Q) { return LaurentPoly::parse(f, s); }

Matrix<mpz_class> ints(const std::vector<std::vector<long>>& rows) {
  Matrix<mpz_class> m(rows.size(), rows.empty() ? 0 : rows[0].size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

} // namespace

TEST_CASE("scalars stay canonical") {
  const Scalar a = Scalar::parse(Q, "2/6");
  CHECK(a.str() == "1/3");
  CHECK((a + Scalar::parse(Q, "-4/6")).str() == "-1/3");
  const Field f5 = Field::prime(5);
  CHECK(Scalar(f5, -1).residue() == 4);
  CHECK((Scalar(f5, 3) * Scalar(f5, 2)).residue() == 1);
  CHECK(Scalar(f5, 2).inverse().residue() == 3);
  CHECK_THROWS(Field::prime(6));
  CHECK(Field::parse("f2").characteristic() == 2);
}

TEST_CASE("rank examples") {
  CHECK(rank(identity(Q, 2)) == 2);
  CHECK(rank(from_integers(Field::prime(2), {{1, 1}, {1, 1}})) == 1);
  // [I | S - I] with S the 2x2 swap
  CHECK(rank(from_integers(Q, {{1, 0, -1, 1}, {0, 1, 1, -1}})) == 2);
  CHECK(rank(zeros(Q, 0, 0)) == 0);
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(zeros(Q, 1, 3), Q).cols() == 3);
  CHECK(kernel_basis(identity(Q, 3), Q).cols() == 0);
  const auto k = kernel_basis(from_integers(Q, {{2, -1}}), Q);
  REQUIRE(k.cols() == 1);
  // proportional to (1, 2)
  CHECK(k(1, 0) == Scalar(Q, 2) * k(0, 0));
  CHECK(!k(0, 0).is_zero());
}

TEST_CASE("kernel columns are annihilated (random)") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    FieldMatrix m = zeros(Q, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(Q, d(rng));
    const auto k = kernel_basis(m, Q);
    CHECK(k.cols() == c - rank(m));
    CHECK(m.multiply(k, Scalar::zero(Q)).is_zero());
  }
}

TEST_CASE("integer Smith normal form") {
  CHECK(snf_integers(ints({{2}})).diagonal == std::vector<mpz_class>{2});
  CHECK(snf_integers(ints({{2, 0}, {0, 3}})).diagonal == std::vector<mpz_class>{1, 6});
  CHECK(snf_integers(ints({{0}})).diagonal == std::vector<mpz_class>{0});
  const auto s = snf_integers(ints({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(s.diagonal == std::vector<mpz_class>{2, 6, 12});
}

TEST_CASE("rank over Q equals the number of nonzero SNF entries (random)") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    FieldMatrix m = zeros(Q, r, c);
    Matrix<mpz_class> z(r, c, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        const long v = trial % 3 == 0 ? d(rng) * 2 : d(rng);
        m(i, j) = Scalar(Q, v);
        z(i, j) = v;
      }
    const auto s = snf_integers(z);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
      if (s.diagonal[i] != 0) ++nonzero;
      CHECK(s.diagonal[i] >= 0);
      if (i + 1 < s.diagonal.size() && s.diagonal[i] != 0)
        CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
    CHECK(nonzero == rank(m));
    CHECK(nonzero == s.rank);
  }
}

TEST_CASE("smith transforms satisfy P A Q = D over F[t]") {
  const PolynomialRing ring{Q};
  PolyMatrix a = poly_zeros(Q, 2, 3);
  a(0, 0) = lp("1 + t");
  a(0, 1) = lp("t^2 - 1");
  a(1, 0) = lp("t");
  a(1, 2) = lp("2 - t");
  const auto s = smith_form(a, ring);
  const auto d = s.p.multiply(a, LaurentPoly(Q)).multiply(s.q, LaurentPoly(Q));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(d(i, j).is_zero());
  const auto qq = s.q.multiply(s.q_inverse, LaurentPoly(Q));
  CHECK(qq == PolyMatrix::identity(3, LaurentPoly(Q), LaurentPoly::constant(Q, 1)));
}

TEST_CASE("Laurent canonical form, degree and printing") {
  const auto p = lp("-t^-1 + 2 - 3*t^2");
  CHECK(p.lowest() == -1);
  CHECK(p.degree() == 3);
  CHECK(p.str() == "-t^-1 + 2 - 3*t^2");
  CHECK(lp("t^2 - t + 1").str() == "1 - t + t^2");
  CHECK(lp("t - 1").canonical().str() == "-1 + t");
  CHECK(lp("3*t^5 - 3*t^4").canonical() == lp("t - 1"));
  CHECK(!LaurentPoly(Q).degree().has_value());
  // degree invariant under units
  CHECK((lp("-2*t^7") * p).degree() == p.degree());
  CHECK_THROWS(lp("1 + *t"));
  CHECK(lp("1/2*t").str() == "1/2*t");
}

TEST_CASE("Laurent parse/print round trip (random)") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-5, 5);
  for (Field f : {Q, Field::prime(5)})
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<long> cs(rng() % 6);
      for (auto& c : cs) c = d(rng);
      const auto p = LaurentPoly::from_ints(f, cs, static_cast<int>(rng() % 7) - 3);
      CHECK(LaurentPoly::parse(f, p.str()) == p);
      CHECK(LaurentPoly::parse(f, p.str()).str() == p.str());
    }
}

TEST_CASE("pid_homology_order examples") {
  PolyMatrix d_in = poly_zeros(Q, 1, 1);
  d_in(0, 0) = lp("t - 1");
  CHECK(pid_homology_order(d_in, poly_zeros(Q, 0, 1), Q) == lp("t - 1"));

  PolyMatrix id = PolyMatrix::identity(2, LaurentPoly(Q), LaurentPoly::constant(Q, 1));
  CHECK(pid_homology_order(id, poly_zeros(Q, 1, 2), Q) == LaurentPoly::constant(Q, 1));

  CHECK(pid_homology_order(poly_zeros(Q, 1, 1), poly_zeros(Q, 1, 1), Q).is_zero());
  CHECK(pid_homology_order(poly_zeros(Q, 3, 0), poly_zeros(Q, 0, 3), Q).is_zero());

  PolyMatrix bad_out = poly_zeros(Q, 1, 1);
  bad_out(0, 0) = lp("1");
  CHECK_THROWS_AS(pid_homology_order(d_in, bad_out, Q), scx::BoundaryError);

  // ker [t-1, t-1] / im (D_x, D_y) for the trefoil group, D_x = -(D_y).
  PolyMatrix d1 = poly_zeros(Q, 1, 2);
  d1(0, 0) = lp("t - 1");
  d1(0, 1) = lp("t - 1");
  PolyMatrix d2 = poly_zeros(Q, 2, 1);
  d2(0, 0) = lp("t^-1 - t^-2 + t^-3");
  d2(1, 0) = lp("-t^-1 + t^-2 - t^-3");
  CHECK(pid_homology_order(d2, d1, Q) == lp("t^2 - t + 1"));
}

TEST_CASE("det_poly examples") {
  PolyMatrix a = poly_zeros(Q, 1, 1);
  a(0, 0) = lp("t - 1");
  CHECK(det_poly(a, Q) == lp("t - 1"));
  PolyMatrix b = poly_zeros(Q, 2, 2);
  b(0, 0) = b(1, 1) = lp("1 - t");
  CHECK(det_poly(b, Q) == lp("1 - 2*t + t^2"));
  CHECK(det_poly(b, Q).degree() == 2);
  PolyMatrix c = poly_zeros(Q, 2, 2);
  c(0, 0) = lp("1 + t");
  c(1, 1) = lp("t");
  CHECK(det_poly(c, Q) == lp("t + t^2"));
  CHECK(det_poly(poly_zeros(Q, 0, 0), Q) == LaurentPoly::constant(Q, 1));
}

TEST_CASE("det_poly agrees with cofactor expansion (random)") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    PolyMatrix m = poly_zeros(Q, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = LaurentPoly::from_ints(Q, {d(rng), d(rng)}, static_cast<int>(rng() % 3) - 1);
    // cofactor oracle
    std::function<LaurentPoly(const PolyMatrix&)> cof = [&](const PolyMatrix& x) {
      const std::size_t k = x.rows();
      if (k == 1) return x(0, 0);
      LaurentPoly sum(Q);
      for (std::size_t j = 0; j < k; ++j) {
        PolyMatrix minor = poly_zeros(Q, k - 1, k - 1);
        for (std::size_t r = 1; r < k; ++r)
          for (std::size_t c = 0, cc = 0; c < k; ++c)
            if (c != j) minor(r - 1, cc++) = x(r, c);
        const LaurentPoly term = x(0, j) * cof(minor);
        if (j % 2) sum -= term; else sum += term;
      }
      return sum;
    };
    CHECK(det_poly(m, Q) == cof(m));
  }
}
