#include "scx/error.hpp"
#include "scx/grp/representation.hpp"

#include <doctest.h>

#include <random>

using namespace scx::grp;
using scx::algebra::Field;
using scx::algebra::from_integers;

namespace {

const Field Q = Field::rationals();

GroupPresentation trefoil() {
  GroupPresentation g({"x", "y"}, {});
  g.add_relator(g.parse_word("x*y*x*y^-1*x^-1*y^-1"));
  return g;
}

Permutation cyc(const std::string& s, std::size_t n) { return Permutation::parse_cycles(s, n); }

} // namespace

TEST_CASE("words reduce freely and print with powers") {
  const std::vector<std::string> names{"x", "y"};
  CHECK(Word::parse("x*y*y^-1*x^-1", names).empty());
  CHECK(Word::parse("x^3*y^-2", names).str(names) == "x^3*y^-2");
  CHECK(Word::parse("1", names).str(names) == "1");
  CHECK(Word::parse("x*1*x", names).str(names) == "x^2");
  const Word w = Word::parse("x*y^-1", names);
  CHECK((w * w.inverse()).empty());
  CHECK(w.exponent_sum(1) == -1);
  std::size_t at = 99;
  CHECK_THROWS_AS(Word::parse("x**y", names, &at), scx::InputError);
  CHECK(at == 2);
  CHECK_THROWS_AS(Word::parse("z", names), scx::InputError);
  CHECK_THROWS_AS(Word::parse("x^", names), scx::InputError);
  CHECK(is_identifier("a.1"));
  CHECK(!is_identifier("1a"));
}

TEST_CASE("permutation cycles") {
  const Permutation p = cyc("(1 2 3)", 4);
  CHECK(p.str() == "(1 2 3)");
  CHECK((p * p * p).is_identity());
  CHECK((p * p.inverse()).is_identity());
  CHECK(cyc("", 3).str() == "()");
  CHECK(cyc("(1 2)(3 4)", 4).str() == "(1 2)(3 4)");
  CHECK_THROWS(cyc("(1 5)", 4));
  CHECK_THROWS(cyc("(1 2)(2 3)", 4));
  // composition: (a*b)(i) = a(b(i))
  const Permutation a = cyc("(1 2)", 3), b = cyc("(2 3)", 3);
  CHECK((a * b)(0) == 1);
  CHECK((a * b)(1) == 2);
  CHECK((a * b)(2) == 0);
}

TEST_CASE("eval_word examples") {
  GroupPresentation g({"x"}, {});
  const auto rep = Representation::from_permutations(g, {cyc("(1 2)", 2)}, Q);
  CHECK(eval_word(rep, Word()) == scx::algebra::identity(Q, 2));
  const auto s = from_integers(Q, {{0, 1}, {1, 0}});
  CHECK(eval_word(rep, g.parse_word("x^2")) == scx::algebra::identity(Q, 2));
  CHECK(eval_word(rep, g.parse_word("x^-1")) == s);
  const auto user = Representation::from_matrices(g, {from_integers(Q, {{1, 1}, {0, 1}})}, Q, false);
  CHECK(eval_word(user, g.parse_word("x^3")) == from_integers(Q, {{1, 3}, {0, 1}}));
  CHECK(eval_word(user, g.parse_word("x^-2")) == from_integers(Q, {{1, -2}, {0, 1}}));
}

TEST_CASE("check_hom examples") {
  const auto t = trefoil();
  CHECK(check_hom(t, {cyc("(1 2)", 3), cyc("(2 3)", 3)}));
  CHECK(check_hom(t, {cyc("(1 2)", 3), cyc("(1 2)", 3)}));
  GroupPresentation c2({"x"}, {});
  c2.add_relator(c2.parse_word("x^2"));
  CHECK(!check_hom(c2, {cyc("(1 2 3)", 3)}));
  CHECK_THROWS_AS(check_hom(t, {cyc("(1 2)", 3)}), scx::InputError);
}

TEST_CASE("enumerate_quotients examples") {
  GroupPresentation z({"x"}, {});
  const auto qs = enumerate_quotients(z, {2, false, 1});
  REQUIRE(qs.size() == 2);
  CHECK(qs[1].images[0] == cyc("(1 2)", 2));
  CHECK(qs[1].transitive);
  CHECK(qs[1].image_order == 2);

  const auto t = trefoil();
  const auto tq = enumerate_quotients(t, {3, false, 1});
  const std::vector<Permutation> epi{cyc("(1 2)", 3), cyc("(2 3)", 3)};
  bool found = false;
  for (const auto& q : tq)
    if (q.images == epi) {
      found = true;
      CHECK(q.image_order == 6);
    }
  CHECK(found);
  // brute force oracle: all pairs in S_2 and S_3 that satisfy the relator
  std::size_t brute = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto all = closure({cyc("(1 2)", n), n == 3 ? cyc("(1 2 3)", 3) : cyc("(1 2)", 2)}, n);
    for (const auto& a : all)
      for (const auto& b : all)
        if (check_hom(t, {a, b})) ++brute;
  }
  CHECK(tq.size() == brute);

  GroupPresentation trivial({"x"}, {});
  trivial.add_relator(trivial.parse_word("x"));
  for (const auto& q : enumerate_quotients(trivial, {4, false, 1}))
    CHECK(q.images[0].is_identity());
  CHECK(enumerate_quotients(trivial, {4, false, 1}).size() == 3);
}

TEST_CASE("enumeration is lexicographic and thread independent") {
  GroupPresentation f2({"a", "b"}, {});
  const auto one = enumerate_quotients(f2, {3, false, 1});
  const auto four = enumerate_quotients(f2, {3, false, 4});
  CHECK(one == four);
  CHECK(one.size() == 4 + 36);
  for (std::size_t i = 1; i < one.size(); ++i)
    if (one[i].degree == one[i - 1].degree) CHECK(one[i - 1].images < one[i].images);
  const auto trans = enumerate_quotients(f2, {3, true, 2});
  for (const auto& q : trans) CHECK(q.transitive);
  CHECK(trans.size() < one.size());
}

TEST_CASE("permutation and regular representations") {
  GroupPresentation z({"x"}, {});
  FiniteQuotient deg1;
  deg1.images = {Permutation::identity(1)};
  CHECK(permutation_representation(z, deg1).dim() == 1);
  CHECK(regular_representation(z, deg1).dim() == 1);

  const auto z2 = make_quotient(z, {cyc("(1 2)", 2)}, 2);
  const auto pr = permutation_representation(z, z2);
  CHECK(pr.image(0) == from_integers(Q, {{0, 1}, {1, 0}}));
  CHECK(regular_representation(z, z2).image(0) == pr.image(0));
  CHECK(pr.unitary());

  const auto t = trefoil();
  const auto s3 = make_quotient(t, {cyc("(1 2)", 3), cyc("(2 3)", 3)}, 3);
  const auto p3 = permutation_representation(t, s3);
  CHECK(check_hom(t, p3));
  const auto r6 = regular_representation(t, s3);
  CHECK(r6.dim() == 6);
  CHECK(r6.provenance() == Provenance::Regular);
  CHECK(check_hom(t, r6));
  CHECK_THROWS_AS(regular_representation(t, s3, Q, 5), scx::SizeLimitError);
}

TEST_CASE("dagger") {
  GroupPresentation z({"x"}, {});
  const auto triv = Representation::trivial(z, 1, Q);
  CHECK(dagger(triv) == triv);
  const auto sw = Representation::from_permutations(z, {cyc("(1 2)", 2)}, Q);
  CHECK(dagger(sw) == sw);
  const auto u = Representation::from_matrices(z, {from_integers(Q, {{1, 1}, {0, 1}})}, Q, false);
  CHECK(dagger(u).image(0) == from_integers(Q, {{1, 0}, {-1, 1}}));
  CHECK(dagger(dagger(u)) == u);
}

TEST_CASE("kernel words evaluate to the identity (random)") {
  const auto t = trefoil();
  std::mt19937 rng(1);
  const auto qs = enumerate_quotients(t, {4, false, 1});
  for (int trial = 0; trial < 50; ++trial) {
    const auto& q = qs[rng() % qs.size()];
    const auto rep = permutation_representation(t, q);
    // conjugates of relators and their products lie in the kernel
    std::vector<Letter> ls;
    for (int k = 0; k < 3; ++k) ls.push_back({rng() % 2, rng() % 2 ? 1 : -1});
    const Word c(ls);
    const Word r = t.relators()[0];
    const Word w = c * r * c.inverse() * r.inverse();
    CHECK(eval_word(rep, w) == scx::algebra::identity(Q, rep.dim()));
  }
}
