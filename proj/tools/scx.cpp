#include "scx/alex/alex.hpp"
#include "scx/error.hpp"
#include "scx/io/rep_format.hpp"
#include "scx/io/scx_format.hpp"
#include "scx/sutured/sutured.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace scx;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct Common {
  std::string file;
  unsigned threads = grp::default_threads();
};

io::ScxDocument load(const std::string& path) { return io::load_scx(path); }

grp::Representation resolve_rep(const std::string& spec, const std::string& field,
                                 const grp::GroupPresentation& g) {
  return io::parse_rep_spec(spec).resolve(g, algebra::Field::parse(field));
}

void print_betti(const std::string& label, const std::optional<chain::BettiVector>& b) {
  if (b) std::cout << "  " << label << " = " << b->str() << "\n";
}

int print_verdict(const sutured::Verdict& v, const grp::GroupPresentation& g, std::size_t max_degree) {
  std::cout << "status: " << sutured::to_string(v.status) << "\n";
  if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    std::cout << "witness: " << w.test << "\n";
    if (w.quotient) std::cout << "  quotient: " << w.quotient->str(g) << "\n";
    if (!w.representation.empty()) std::cout << "  representation: " << w.representation << "\n";
    if (w.image_order) std::cout << "  |G| = " << w.image_order << "\n";
    if (w.rminus_order) std::cout << "  |im pi1(R-)| = " << w.rminus_order << "\n";
    print_betti("b(M,R-)", w.betti);
    print_betti("b(M,R+)", w.betti_plus);
    if (!w.detail.empty()) std::cout << "  " << w.detail << "\n";
  }
  for (const auto& a : v.assumptions) std::cout << "assumes: " << a << "\n";
  std::cout << "searched: quotients of degree <= " << max_degree << ", representations tested "
            << v.representations_tested << "\n";
  for (const auto& l : v.log) std::cout << "log: " << l << "\n";
  return sutured::exit_code(v.status);
}

int cmd_check(const Common& c) {
  const auto doc = load(c.file);
  const auto& cx = doc.complex;
  bool ok = true;
  auto report = [&](bool pass, const std::string& what) {
    std::cout << (pass ? "ok   " : "FAIL ") << what << "\n";
    ok = ok && pass;
  };
  std::cout << cx.size() << " cells, chi = " << cx.euler_characteristic() << "\n";
  const int bad = chain::abelian_boundary_check(cx);
  report(bad == 0, bad == 0 ? "d^2 = 0 under the abelianization"
                            : "d^2 != 0 under the abelianization in degree " + std::to_string(bad));
  if (bad != 0) return 1;
  const auto triv = grp::Representation::trivial(cx.group(), 1, algebra::Field::rationals());
  report(chain::euler_check(cx, nullptr, triv).pass, "Euler identity for X");
  const bool connected = chain::one_skeleton_connected(cx);
  for (const auto& s : doc.subcomplexes) {
    report(chain::open_cells(cx, s).empty(), "subcomplex " + s.name + " is closed");
    if (!chain::open_cells(cx, s).empty()) continue;
    report(chain::euler_check(cx, &s, triv).pass, "Euler identity for (X, " + s.name + ")");
    if (connected && !s.cells.empty()) {
      const auto h = chain::h0_vanishing_check(cx, s, triv, false);
      report(h.pass, "H_0(X, " + s.name + ") = 0");
    }
  }
  if (const auto phi = doc.meta_value("phi")) {
    report(sutured::CohomologyClass::parse(*phi, cx.group()).is_cocycle(cx.group()), "phi is a cocycle");
  }
  if (doc.sub("R-") && doc.sub("R+")) {
    const auto sc = sutured::SuturedComplex::from_document(doc);
    const auto v = sutured::validate(sc);
    for (const auto& e : v.errors) report(false, e);
    for (const auto& w : v.warnings) std::cout << "warn " << w << "\n";
    report(v.ok(), "sutured structure valid");
    std::cout << (v.balanced ? "balanced" : "not balanced") << "\n";
    if (v.ok() && connected) {
      const auto h = chain::h0_vanishing_check(cx, sc.rminus, triv, sc.manifold);
      report(h.pass, "H_0 and H_3 vanishing for (M, R-)");
    }
  }
  return ok ? 0 : 1;
}

int cmd_homology(const Common& c, const std::string& rel, const std::string& rep_spec,
                 const std::string& field, bool integral) {
  const auto doc = load(c.file);
  const chain::SubcomplexRef* y = rel.empty() ? nullptr : &doc.require_sub(rel);
  if (y) chain::require_closed(doc.complex, *y);
  const std::string inner = "X" + (rel.empty() ? std::string() : ", " + rel);
  if (integral) {
    const auto h = chain::integral_homology(doc.complex, y);
    for (int i = 0; i < 4; ++i) std::cout << "H_" << i << "(" << inner << "; Z) = " << h.str(i) << "\n";
    return 0;
  }
  const auto rep = resolve_rep(rep_spec, field, doc.complex.group());
  const auto b = chain::betti(doc.complex, y, rep);
  std::cout << "representation: " << rep.describe(doc.complex.group()) << "\n";
  std::cout << "b(" << inner << ") = " << b.str() << "\n";
  return 0;
}

int cmd_certify(const Common& c, std::size_t max_degree) {
  const auto sc = sutured::SuturedComplex::from_document(load(c.file));
  sutured::SearchOptions o;
  o.max_degree = max_degree;
  o.threads = c.threads;
  return print_verdict(sutured::certify_taut(sc, o), sc.m.group(), max_degree);
}

int cmd_nonproduct(const Common& c, std::size_t max_degree, std::size_t cap) {
  const auto sc = sutured::SuturedComplex::from_document(load(c.file));
  sutured::SearchOptions o;
  o.max_degree = max_degree;
  o.threads = c.threads;
  o.regular_cap = cap;
  return print_verdict(sutured::nonproduct_search(sc, o), sc.m.group(), max_degree);
}

int cmd_bounds(const Common& c, const std::string& rep_spec, const std::string& field) {
  const auto sc = sutured::SuturedComplex::from_document(load(c.file));
  const auto rep = resolve_rep(rep_spec, field, sc.m.group());
  sutured::ComplexityBound b;
  try {
    b = sutured::complexity_lower_bound(sc, rep);
  } catch (const InputError& e) {
    std::cout << "refused: " << e.what() << "\n";
    return 1;
  }
  std::cout << "representation: " << rep.describe(sc.m.group()) << "\n";
  std::cout << "b1(M,R-) = " << b.b1_rminus << ", b1(M,R+) = " << b.b1_rplus << ", k = " << b.k << "\n";
  std::cout << "chi_-(R-) = " << b.chi_minus_rminus << ", chi_-(R+) = " << b.chi_minus_rplus << "\n";
  std::cout << "x(M,gamma) >= " << b.bound.get_str() << (b.sharp ? " (sharp)" : "") << "\n";
  return 0;
}

int cmd_double(const Common& c, const std::string& out) {
  const auto sc = sutured::SuturedComplex::from_document(load(c.file));
  const auto d = sutured::double_complex(sc);
  const auto& cx = d.document.complex;
  io::save_scx(d.document, out);
  const auto b = chain::betti(cx, nullptr, grp::Representation::trivial(cx.group(), 1, algebra::Field::rationals()));
  std::cout << "wrote " << out << ": " << cx.size() << " cells, chi = " << cx.euler_characteristic() << "\n";
  std::cout << "phi: " << d.phi.str(cx.group()) << (d.phi.is_cocycle(cx.group()) ? " (cocycle)" : " (NOT a cocycle)")
            << "\n";
  std::cout << "b(DM; q) = " << b.str() << "\n";
  return 0;
}

sutured::CohomologyClass resolve_phi(const io::ScxDocument& doc, const std::string& spec) {
  const auto& g = doc.complex.group();
  if (spec.empty() || spec == "ab") {
    if (spec.empty())
      if (const auto m = doc.meta_value("phi")) return sutured::CohomologyClass::parse(*m, g);
    const auto ab = chain::abelianization_map(g);
    const std::size_t rank = ab.empty() ? 0 : ab.front().size();
    if (rank != 1) throw InputError("--phi ab needs first Betti number 1 (got " + std::to_string(rank) + ")");
    sutured::CohomologyClass phi{std::vector<long>(g.generator_count())};
    for (std::size_t i = 0; i < g.generator_count(); ++i) phi.values[i] = ab[i][0];
    for (long v : phi.values)
      if (v != 0) {
        if (v < 0)
          for (auto& w : phi.values) w = -w;
        break;
      }
    return phi;
  }
  if (spec.find('=') == std::string::npos) {
    const auto m = doc.meta_value(spec);
    if (!m) throw InputError("no metadata entry '" + spec + "'");
    return sutured::CohomologyClass::parse(*m, g);
  }
  return sutured::CohomologyClass::parse(spec, g);
}

int cmd_alex(const Common& c, const std::string& phi_spec, const std::string& rep_spec,
             const std::string& field, bool deg_only, bool det_form) {
  const auto doc = load(c.file);
  const auto& g = doc.complex.group();
  const auto phi = resolve_phi(doc, phi_spec);
  const auto rep = resolve_rep(rep_spec, field, g);
  const auto tb = alex::thurston_bound(doc.complex, phi, rep);
  std::cout << "phi: " << phi.str(g) << "\n";
  std::cout << "representation: " << rep.describe(g) << "\n";
  for (const auto& o : tb.orders) {
    if (!deg_only) std::cout << o.str() << "\n";
    std::cout << "deg Delta_" << o.i << " = " << (o.deg ? std::to_string(*o.deg) : "undefined") << "\n";
  }
  if (tb.bound)
    std::cout << "Thurston norm >= " << tb.bound->get_str() << (tb.floored ? " (floored at 0)" : "") << "\n";
  else
    std::cout << tb.note << "\n";
  if (det_form) {
    const auto cut = alex::fibered_cut(doc);
    const auto rep_x = grp::Representation::trivial(cut.x.group(), rep.dim(), rep.field());
    const auto rep_w = grp::Representation::trivial(g, rep.dim(), rep.field());
    bool all = true;
    for (int i = 0; i < 3; ++i) {
      const auto r = alex::det_form_check(cut, doc.complex, phi, rep_x, rep_w, i);
      if (!r.applicable) {
        std::cout << "det form, degree " << i << ": " << r.reason << "\n";
        all = false;
        continue;
      }
      std::cout << "det form, degree " << i << ": det(i_l - t i_r) = " << r.det.str() << " vs "
                << r.alexander.poly.str() << (r.match ? " (match)" : " (MISMATCH)") << "\n";
      all = all && r.match;
    }
    if (!all) return 1;
  }
  return 0;
}

int cmd_quotients(const Common& c, std::size_t max_degree, bool transitive) {
  const auto doc = load(c.file);
  const auto& g = doc.complex.group();
  std::size_t n = 0;
  grp::enumerate_quotients(g, {max_degree, transitive, c.threads}, [&](const grp::FiniteQuotient& q) {
    std::cout << q.str(g) << "\n";
    ++n;
    return true;
  });
  std::cout << n << " homomorphisms\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted homology toolkit for sutured 3-manifold complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "worker threads (default: SCX_THREADS or 1)")
      ->check(CLI::Range(1u, 256u));

  auto file_arg = [&](CLI::App* s) { s->add_option("file", common.file, "SCX file")->required(); };

  auto* check = app.add_subcommand("check", "validate a complex and run invariant checks");
  file_arg(check);

  std::string rel, rep_spec = "trivial:1", field = "q", phi_spec;
  bool integral = false, deg_only = false, det_form = false, transitive = false;
  std::size_t max_degree = 4, cap = 64;

  auto* homology = app.add_subcommand("homology", "twisted Betti numbers of (X, Y)");
  file_arg(homology);
  homology->add_option("--rel", rel, "relative subcomplex name");
  homology->add_option("--rep", rep_spec, "trivial:k, perm:..., or a representation file");
  homology->add_option("--field", field, "q or fP for a prime P");
  homology->add_flag("--integral", integral, "untwisted integral homology instead");

  auto* certify = app.add_subcommand("certify-taut", "search for a vanishing certificate");
  file_arg(certify);
  certify->add_option("--max-degree", max_degree, "largest quotient degree")->check(CLI::Range(2, 8));

  auto* nonproduct = app.add_subcommand("nonproduct", "search for a non-product certificate");
  file_arg(nonproduct);
  nonproduct->add_option("--max-degree", max_degree, "largest quotient degree")->check(CLI::Range(2, 8));
  nonproduct->add_option("--regular-cap", cap, "largest regular representation");

  auto* bounds = app.add_subcommand("bounds", "complexity lower bound");
  file_arg(bounds);
  bounds->add_option("--rep", rep_spec, "representation");
  bounds->add_option("--field", field, "q or fP");

  std::string out;
  auto* dbl = app.add_subcommand("double", "double along R- and R+");
  file_arg(dbl);
  dbl->add_option("-o,--output", out, "output SCX file")->required();

  auto* alexc = app.add_subcommand("alex", "twisted Alexander polynomials and norm bound");
  file_arg(alexc);
  alexc->add_option("--phi", phi_spec, "ab, a metadata key, or inline x=1 y=1 (default: meta phi)");
  alexc->add_option("--rep", rep_spec, "representation");
  alexc->add_option("--field", field, "q or fP");
  alexc->add_flag("--deg-only", deg_only, "print degrees only");
  alexc->add_flag("--det-form", det_form, "cross-check against det(i_l - t i_r) using meta monodromy");

  auto* quot = app.add_subcommand("quotients", "list homomorphisms to symmetric groups");
  file_arg(quot);
  quot->add_option("--max-degree", max_degree, "largest degree")->check(CLI::Range(2, 8));
  quot->add_flag("--transitive", transitive, "transitive images only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return cmd_check(common);
    if (*homology) return cmd_homology(common, rel, rep_spec, field, integral);
    if (*certify) return cmd_certify(common, max_degree);
    if (*nonproduct) return cmd_nonproduct(common, max_degree, cap);
    if (*bounds) return cmd_bounds(common, rep_spec, field);
    if (*dbl) return cmd_double(common, out);
    if (*alexc) return cmd_alex(common, phi_spec, rep_spec, field, deg_only, det_form);
    if (*quot) return cmd_quotients(common, max_degree, transitive);
  } catch (const ParseError& e) {
    std::cerr << common.file << ": " << e.what() << "\n";
    return kExitData;
  } catch (const BoundaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
