#include "corpus.hpp"

#include "scx/error.hpp"
#include "scx/io/rep_format.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>

using namespace scx;
using namespace scx::io;

namespace {

const char* const kCorpus[] = {"product_T1.scx",         "meridional_solidtorus.scx", "solidtorus_4meridional.scx",
                               "slope2_solidtorus.scx",  "annulus_product.scx",       "disk_product.scx",
                               "d3_two_sutures.scx",     "trefoil.scx",               "figure8.scx",
                               "trefoil_fibered.scx",   "handlebody_twisted.scx"};

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_scx(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

} // namespace

TEST_CASE("corpus files parse and round-trip") {
  for (const char* name : kCorpus) {
    const auto doc = load_doc(name);
    CHECK_MESSAGE(!doc.header.empty(), name);
    const auto text = serialize_scx(doc);
    CHECK_MESSAGE(parse_scx(text) == doc, name);
    CHECK(serialize_scx(parse_scx(text)) == text);
  }
  CHECK(load_doc("product_T1.scx").complex.size() == 9);
}

TEST_CASE("boundary terms keep coefficients and words") {
  const auto doc = parse_scx("scx 1\ngen x\ncell q dim 0\ncell m dim 1\ncell x dim 1\ncell D dim 2\n"
                             "bnd D = 1*1*m + -1*1*x + -1*x*x\n");
  const auto& b = doc.complex.cell(doc.complex.index("D")).boundary;
  REQUIRE(b.size() == 3);
  const auto& g = doc.complex.group();
  CHECK(g.str(b[0].word) == "1");
  CHECK(g.str(b[1].word) == "1");
  CHECK(g.str(b[2].word) == "x");
  CHECK(b[1].coeff == -1);
  CHECK(doc.complex.cell(b[2].cell).name == "x");
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("gen x\n") == 1);
  CHECK(parse_error_line("scx 1\ngen x\ncell p dim 0\ncell e dim 1\nbnd e = 1*y*p\n") == 5);
  CHECK(parse_error_line("scx 1\ngen x\ncell p dim 0\ncell e dim 1\nbnd e = 1*x*e\n") == 5);
  CHECK(parse_error_line("scx 1\ncell p dim 4\n") == 2);
  CHECK(parse_error_line("scx 1\ncell p dim 0\ncell p dim 0\n") == 3);
  CHECK(parse_error_line("scx 1\ncell p dim 0\nsub R- = p q\n") == 3);
  CHECK(parse_error_line("scx 1\ngen x\nrel x^\n") == 3);
  // Truncated corpus file.
  const auto text = read_file(data_path("product_T1.scx"));
  const auto cut = text.substr(0, text.find("bnd A") + 12);
  CHECK(parse_error_line(cut) != 0);
  try {
    parse_scx("scx 1\ngen x\ncell p dim 0\ncell e dim 1\nbnd e = 1*y*p\n");
  } catch (const ParseError& e) {
    CHECK(e.column() == 11);
  }
}

TEST_CASE("random documents round-trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    ScxDocument doc;
    std::vector<std::string> gens;
    const int ng = 1 + rng() % 3;
    for (int i = 0; i < ng; ++i) gens.push_back(std::string(1, static_cast<char>('a' + i)));
    grp::GroupPresentation g(gens, {});
    auto random_word = [&] {
      std::vector<grp::Letter> ls;
      const int len = rng() % 5;
      for (int i = 0; i < len; ++i) ls.push_back({rng() % gens.size(), rng() % 2 ? 1 : -1});
      return grp::Word(ls);
    };
    if (rng() % 2) {
      const auto r = random_word();
      if (!r.empty()) g.add_relator(r);
    }
    doc.complex = chain::EquivariantComplex(g);
    std::vector<std::size_t> by_dim[4];
    for (int d = 0; d < 4; ++d) {
      const int n = d == 0 ? 1 + rng() % 3 : rng() % 3;
      for (int i = 0; i < n; ++i)
        by_dim[d].push_back(doc.complex.add_cell("c" + std::to_string(d) + "_" + std::to_string(i), d));
    }
    for (int d = 1; d < 4; ++d)
      for (auto c : by_dim[d]) {
        if (by_dim[d - 1].empty()) continue;
        std::vector<chain::BoundaryTerm> terms;
        const int nt = rng() % 4;
        for (int i = 0; i < nt; ++i)
          terms.push_back({static_cast<long>(rng() % 5) - 2 == 0 ? 1 : static_cast<long>(rng() % 5) - 2,
                           random_word(), by_dim[d - 1][rng() % by_dim[d - 1].size()]});
        doc.complex.set_boundary(c, terms);
      }
    doc.subcomplexes.push_back({"Y", by_dim[0]});
    doc.set_meta("sutures", std::to_string(trial));
    doc.header = {"random document"};
    const auto text = serialize_scx(doc);
    const auto back = parse_scx(text);
    CHECK(back == doc);
  }
}

TEST_CASE("save and load agree") {
  const auto doc = load_doc("slope2_solidtorus.scx");
  const auto path = std::filesystem::temp_directory_path() / "scx_io_roundtrip.scx";
  save_scx(doc, path.string());
  CHECK(load_scx(path.string()) == doc);
  std::filesystem::remove(path);
}

TEST_CASE("representation documents") {
  grp::GroupPresentation g({"x", "y"}, {});
  g.add_relator(g.parse_word("x*y*x*y^-1*x^-1*y^-1"));
  const auto t = parse_rep_spec("trivial:3").resolve(g);
  CHECK(t.dim() == 3);
  const auto p = parse_rep_spec("perm:x=(1 2),y=(2 3)").resolve(g);
  CHECK(p.dim() == 3);
  CHECK(grp::check_hom(g, p));
  CHECK_THROWS_AS(parse_rep_spec("perm:x=(1 2),y=(1 2 3)").resolve(g), InputError);
  const auto p4 = parse_rep_spec("perm:4:x=(1 2)(3 4),y=(1 2)(3 4)").resolve(g);
  CHECK(p4.dim() == 4);
  const auto m = parse_rep("rep 1\nmatrix q 2\nx = 1 1 ; 0 1\ny = 1 0 ; -1 1\nunitary 0\n").resolve(g);
  CHECK(m.dim() == 2);
  CHECK(grp::check_hom(g, m));
  const auto f = parse_rep("rep 1\nperm 2\nx = (1 2)\ny = (1 2)\n").resolve(g, algebra::Field::prime(5));
  CHECK(f.field() == algebra::Field::prime(5));
  CHECK_THROWS(parse_rep("rep 1\nbogus 2\n"));
}
