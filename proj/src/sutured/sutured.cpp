#include "scx/sutured/sutured.hpp"

#include "scx/error.hpp"

#include <algorithm>
#include <sstream>

namespace scx::sutured {

long CohomologyClass::eval(const grp::Word& w) const {
  long s = 0;
  for (const auto& l : w.letters()) s += l.exp * values.at(l.gen);
  return s;
}

bool CohomologyClass::is_cocycle(const GroupPresentation& g) const {
  if (values.size() != g.generator_count()) return false;
  for (const auto& r : g.relators())
    if (eval(r) != 0) return false;
  return true;
}

std::string CohomologyClass::str(const GroupPresentation& g) const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) out += (out.empty() ? "" : " ") + g.generators()[i] + "=" + std::to_string(values[i]);
  if (out.empty() && !values.empty()) out = g.generators()[0] + "=0";
  return out;
}

CohomologyClass CohomologyClass::parse(const std::string& text, const GroupPresentation& g) {
  CohomologyClass c{std::vector<long>(g.generator_count(), 0)};
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::istringstream is(norm);
  std::string item;
  while (is >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("class entries read <gen>=<int>: '" + item + "'");
    const auto idx = g.index_of(item.substr(0, eq));
    if (!idx) throw InputError("class names unknown generator '" + item.substr(0, eq) + "'");
    try {
      std::size_t used = 0;
      const std::string v = item.substr(eq + 1);
      c.values[*idx] = std::stol(v, &used);
      if (used != v.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw InputError("bad class value in '" + item + "'");
    }
  }
  return c;
}

SuturedComplex SuturedComplex::from_document(const io::ScxDocument& doc) {
  SuturedComplex sc;
  sc.m = doc.complex;
  sc.rminus = doc.require_sub("R-");
  sc.rplus = doc.require_sub("R+");
  if (const auto* g = doc.sub("gamma")) sc.gamma = *g;
  else sc.gamma = {"gamma", {}};
  sc.sutures = doc.meta_int("sutures", 1);
  sc.irreducible = doc.meta_int("irreducible", 0) != 0;
  sc.s1xd2 = doc.meta_int("s1xd2", 0) != 0;
  sc.d3 = doc.meta_int("d3", 0) != 0;
  sc.manifold = doc.meta_int("manifold", 0) != 0;
  sc.chi_rminus = doc.meta_int("chi_rminus", chain::euler_characteristic(chain::restrict_to(sc.m, sc.rminus), nullptr));
  sc.chi_rplus = doc.meta_int("chi_rplus", chain::euler_characteristic(chain::restrict_to(sc.m, sc.rplus), nullptr));
  return sc;
}

namespace {

long chi_of(const EquivariantComplex& cx, const std::vector<std::size_t>& cells) {
  long chi = 0;
  for (auto c : cells) chi += cx.cell(c).dim % 2 ? -1 : 1;
  return chi;
}

std::string cell_list(const EquivariantComplex& cx, const std::vector<std::size_t>& cells) {
  std::string s;
  for (auto c : cells) s += (s.empty() ? "" : " ") + cx.cell(c).name;
  return s;
}

} // namespace

long chi_minus(const EquivariantComplex& cx, const SubcomplexRef& s) {
  long total = 0;
  for (const auto& comp : chain::components(cx, s)) total += std::max(-chi_of(cx, comp), 0L);
  return total;
}

ValidationReport validate(const SuturedComplex& sc) {
  ValidationReport r;
  const auto& cx = sc.m;
  bool closed = true;
  for (const auto* s : {&sc.rminus, &sc.rplus, &sc.gamma}) {
    const auto open = chain::open_cells(cx, *s);
    if (!open.empty()) {
      r.errors.push_back("subcomplex " + s->name + " is not closed; missing: " + cell_list(cx, open));
      closed = false;
    }
  }
  std::vector<std::size_t> both;
  std::set_intersection(sc.rminus.cells.begin(), sc.rminus.cells.end(), sc.rplus.cells.begin(),
                        sc.rplus.cells.end(), std::back_inserter(both));
  if (!both.empty()) r.errors.push_back("R- and R+ share cells: " + cell_list(cx, both));
  if (sc.rminus.cells.empty()) r.errors.push_back("R- is empty");
  if (sc.rplus.cells.empty()) r.errors.push_back("R+ is empty");
  if (sc.sutures < 1) r.errors.push_back("suture count must be positive");

  const long chim = chi_of(cx, sc.rminus.cells), chip = chi_of(cx, sc.rplus.cells);
  if (chim != sc.chi_rminus)
    r.errors.push_back("chi(R-) from cells is " + std::to_string(chim) + ", metadata says " +
                       std::to_string(sc.chi_rminus));
  if (chip != sc.chi_rplus)
    r.errors.push_back("chi(R+) from cells is " + std::to_string(chip) + ", metadata says " +
                       std::to_string(sc.chi_rplus));
  if (closed)
    for (const auto& comp : chain::components(cx, sc.gamma))
      if (chi_of(cx, comp) != 0)
        r.errors.push_back("gamma component is not an annulus (chi " +
                           std::to_string(chi_of(cx, comp)) + "): " + cell_list(cx, comp));
  if (!chain::one_skeleton_connected(cx)) r.errors.push_back("1-skeleton of M is not connected");
  if (const int d = chain::abelian_boundary_check(cx))
    r.errors.push_back("boundary does not square to zero under the abelianization (dimension " +
                       std::to_string(d) + ")");
  if (closed)
    for (const auto* s : {&sc.rminus, &sc.rplus})
      for (const auto& comp : chain::components(cx, *s))
        if (chi_of(cx, comp) == 1) {
          ++r.disk_components;
          r.warnings.push_back(s->name + " has a disk component: " + cell_list(cx, comp));
        }
  r.balanced = sc.balanced();
  if (!r.balanced) r.warnings.push_back("not balanced: chi(R-) != chi(R+)");
  return r;
}

std::string to_string(Status s) {
  switch (s) {
  case Status::CertifiedTaut: return "certified-taut";
  case Status::CertifiedNotTaut: return "certified-not-taut";
  case Status::CertifiedNotProduct: return "certified-not-product";
  case Status::CertifiedNotFiberedAnalog: return "certified-not-fibered-analog";
  case Status::Unknown: return "unknown";
  case Status::Refused: return "refused";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
  case Status::CertifiedTaut:
  case Status::CertifiedNotProduct: return 0;
  case Status::Unknown: return 2;
  default: return 1;
  }
}

ComplexityBound complexity_lower_bound(const SuturedComplex& sc, const Representation& rep) {
  const auto v = validate(sc);
  if (!v.ok()) throw InputError("validation failed: " + v.errors.front());
  if (v.disk_components > 0) throw InputError("R+ or R- has a disk component");
  if (!sc.irreducible) throw InputError("M is not asserted irreducible");
  ComplexityBound b;
  b.k = rep.dim();
  b.chi_minus_rminus = chi_minus(sc.m, sc.rminus);
  b.chi_minus_rplus = chi_minus(sc.m, sc.rplus);
  b.b1_rminus = chain::betti(sc.m, &sc.rminus, rep).b[1];
  b.b1_rplus = chain::betti(sc.m, &sc.rplus, rep).b[1];
  mpq_class x(b.chi_minus_rminus + b.chi_minus_rplus);
  x -= mpq_class(static_cast<long>(b.b1_rminus + b.b1_rplus), static_cast<long>(b.k));
  x /= 2;
  x.canonicalize();
  b.bound = x < 0 ? mpq_class(0) : x;
  b.sharp = b.bound == std::min(b.chi_minus_rminus, b.chi_minus_rplus);
  return b;
}

} // namespace scx::sutured
