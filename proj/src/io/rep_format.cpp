#include "scx/io/rep_format.hpp"

#include "scx/error.hpp"
#include "scx/io/scx_format.hpp"

#include <algorithm>
#include <sstream>

namespace scx::io {

using algebra::Field;
using algebra::Scalar;

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::size_t parse_count(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size() && v > 0 && v <= 255) return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
  }
  throw ParseError(line, 1, "expected a positive size, got '" + s + "'");
}

/// Largest point mentioned in cycle notation.
std::size_t max_point(const std::string& cycles) {
  std::size_t best = 0;
  std::string digits;
  for (char ch : cycles + " ") {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
    } else if (!digits.empty()) {
      best = std::max<std::size_t>(best, std::stoul(digits));
      digits.clear();
    }
  }
  return best;
}

} // namespace

RepDocument parse_rep(const std::string& text) {
  RepDocument doc;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool header = false, kind_seen = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (!header) {
      std::string v;
      ls >> v;
      if (kw != "rep" || v != "1") throw ParseError(lineno, 1, "expected 'rep 1' header");
      header = true;
      continue;
    }
    if (!kind_seen) {
      std::string a, b;
      ls >> a >> b;
      if (kw == "trivial") {
        doc.kind = RepDocument::Kind::Trivial;
        doc.dim = parse_count(a, lineno);
      } else if (kw == "perm") {
        doc.kind = RepDocument::Kind::Perm;
        doc.dim = parse_count(a, lineno);
      } else if (kw == "matrix") {
        doc.kind = RepDocument::Kind::Matrix;
        doc.matrix_field = a;
        doc.dim = parse_count(b, lineno);
      } else {
        throw ParseError(lineno, 1, "expected 'trivial', 'perm' or 'matrix'");
      }
      kind_seen = true;
      continue;
    }
    if (kw == "unitary") {
      std::string v;
      ls >> v;
      if (v != "0" && v != "1") throw ParseError(lineno, 1, "unitary takes 0 or 1");
      doc.unitary = v == "1";
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, 1, "expected '<gen> = ...'");
    const std::string gen = trim(line.substr(0, eq));
    const std::string rhs = trim(line.substr(eq + 1));
    if (doc.kind == RepDocument::Kind::Perm) {
      doc.perm_images[gen] = rhs;
    } else if (doc.kind == RepDocument::Kind::Matrix) {
      std::vector<std::vector<std::string>> rows;
      std::istringstream rs(rhs);
      std::string row;
      while (std::getline(rs, row, ';')) {
        std::istringstream es(row);
        std::vector<std::string> entries;
        std::string e;
        while (es >> e) entries.push_back(e);
        rows.push_back(entries);
      }
      doc.matrix_images[gen] = rows;
    } else {
      throw ParseError(lineno, 1, "trivial representations take no generator lines");
    }
  }
  if (!header || !kind_seen) throw ParseError(lineno + 1, 1, "truncated representation file");
  return doc;
}

RepDocument parse_rep_spec(const std::string& spec) {
  if (spec.rfind("trivial:", 0) == 0) {
    RepDocument d;
    d.dim = parse_count(spec.substr(8), 1);
    return d;
  }
  if (spec.rfind("perm:", 0) == 0) {
    RepDocument d;
    d.kind = RepDocument::Kind::Perm;
    std::string body = spec.substr(5);
    std::size_t degree = 0;
    const auto colon = body.find(':');
    if (colon != std::string::npos) {
      degree = parse_count(body.substr(0, colon), 1);
      body = body.substr(colon + 1);
    }
    // split on commas outside parentheses
    std::size_t depth = 0, start = 0;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        parts.push_back(body.substr(start, i - start));
        start = i + 1;
      } else if (body[i] == '(') {
        ++depth;
      } else if (body[i] == ')' && depth > 0) {
        --depth;
      }
    }
    std::size_t inferred = 1;
    for (const auto& p : parts) {
      if (trim(p).empty()) continue;
      const auto eq = p.find('=');
      if (eq == std::string::npos) throw InputError("inline permutation needs gen=(cycles): " + p);
      d.perm_images[trim(p.substr(0, eq))] = trim(p.substr(eq + 1));
      inferred = std::max(inferred, max_point(p.substr(eq + 1)));
    }
    d.dim = degree ? degree : inferred;
    return d;
  }
  return parse_rep(read_file(spec));
}

grp::Representation RepDocument::resolve(const grp::GroupPresentation& pres, Field field) const {
  auto check_names = [&](const auto& m) {
    for (const auto& [g, v] : m)
      if (!pres.index_of(g)) throw InputError("representation names unknown generator '" + g + "'");
  };
  switch (kind) {
  case Kind::Trivial:
    return grp::Representation::trivial(pres, dim, field);
  case Kind::Perm: {
    check_names(perm_images);
    std::vector<grp::Permutation> imgs;
    for (const auto& g : pres.generators()) {
      const auto it = perm_images.find(g);
      imgs.push_back(it == perm_images.end() ? grp::Permutation::identity(dim)
                                             : grp::Permutation::parse_cycles(it->second, dim));
    }
    if (!grp::check_hom(pres, imgs)) throw InputError("permutations violate a relator");
    return grp::Representation::from_permutations(pres, std::move(imgs), field);
  }
  case Kind::Matrix: {
    check_names(matrix_images);
    const Field f = Field::parse(matrix_field);
    std::vector<algebra::FieldMatrix> mats;
    for (const auto& g : pres.generators()) {
      const auto it = matrix_images.find(g);
      if (it == matrix_images.end()) {
        mats.push_back(algebra::identity(f, dim));
        continue;
      }
      const auto& rows = it->second;
      if (rows.size() != dim) throw InputError("matrix for '" + g + "' has wrong row count");
      algebra::FieldMatrix m = algebra::zeros(f, dim, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim) throw InputError("matrix for '" + g + "' has a ragged row");
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = Scalar::parse(f, rows[i][j]);
      }
      mats.push_back(std::move(m));
    }
    return grp::Representation::from_matrices(pres, std::move(mats), f, unitary);
  }
  }
  throw Error("unreachable");
}

} // namespace scx::io
