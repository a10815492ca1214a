#include "scx/io/scx_format.hpp"

#include "scx/error.hpp"

#include <fstream>
#include <sstream>

namespace scx::io {

using chain::BoundaryTerm;

const chain::SubcomplexRef* ScxDocument::sub(const std::string& name) const {
  for (const auto& s : subcomplexes)
    if (s.name == name) return &s;
  return nullptr;
}

const chain::SubcomplexRef& ScxDocument::require_sub(const std::string& name) const {
  const auto* s = sub(name);
  if (!s) throw InputError("no subcomplex named '" + name + "'");
  return *s;
}

std::optional<std::string> ScxDocument::meta_value(const std::string& key) const {
  for (const auto& [k, v] : meta)
    if (k == key) return v;
  return std::nullopt;
}

long ScxDocument::meta_int(const std::string& key, long fallback) const {
  const auto v = meta_value(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const long x = std::stol(*v, &used);
    if (used == v->size()) return x;
  } catch (const std::logic_error&) {
  }
  throw InputError("metadata '" + key + "' is not an integer: " + *v);
}

void ScxDocument::set_meta(const std::string& key, const std::string& value) {
  for (auto& [k, v] : meta)
    if (k == key) {
      v = value;
      return;
    }
  meta.emplace_back(key, value);
}

namespace {

struct Token {
  std::string text;
  std::size_t column; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool valid_cell_name(const std::string& s) {
  if (s.empty() || s == "=" || s == "+") return false;
  for (char ch : s)
    if (ch == '*' || ch == '#' || ch == '=') return false;
  return true;
}

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  ScxDocument run() {
    std::istringstream in(text_);
    std::string line;
    bool header_open = true;
    bool seen_version = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      line_ = lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) {
        if (header_open && !seen_version && line.find_first_not_of(" \t") == hash) {
          std::string c = line.substr(hash + 1);
          if (!c.empty() && c[0] == ' ') c.erase(0, 1);
          while (!c.empty() && c.back() == '\r') c.pop_back();
          doc_.header.push_back(c);
        }
        line = line.substr(0, hash);
      }
      const auto toks = tokenize(line);
      if (toks.empty()) continue;
      header_open = false;
      const std::string& kw = toks[0].text;
      if (!seen_version) {
        if (kw != "scx") fail(toks[0].column, "expected 'scx <version>' header");
        if (toks.size() != 2 || toks[1].text != "1")
          fail(toks.size() > 1 ? toks[1].column : toks[0].column, "unsupported SCX version");
        seen_version = true;
        continue;
      }
      if (kw == "gen") {
        if (!doc_.complex.group().relators().empty() || doc_.complex.size() > 0)
          fail(toks[0].column, "'gen' must precede relators and cells");
        for (std::size_t i = 1; i < toks.size(); ++i) {
          try {
            doc_.complex.group().add_generator(toks[i].text);
          } catch (const InputError& e) {
            fail(toks[i].column, e.what());
          }
        }
      } else if (kw == "rel") {
        if (toks.size() != 2) fail(toks[0].column, "'rel' takes exactly one word");
        doc_.complex.group().add_relator(word(toks[1].text, toks[1].column));
      } else if (kw == "cell") {
        if (toks.size() != 4 || toks[2].text != "dim")
          fail(toks[0].column, "expected 'cell <name> dim <0..3>'");
        if (!valid_cell_name(toks[1].text)) fail(toks[1].column, "invalid cell name");
        const std::string& d = toks[3].text;
        if (d.size() != 1 || d[0] < '0' || d[0] > '3') fail(toks[3].column, "dimension must be 0..3");
        try {
          doc_.complex.add_cell(toks[1].text, d[0] - '0');
        } catch (const InputError& e) {
          fail(toks[1].column, e.what());
        }
        has_bnd_.push_back(false);
      } else if (kw == "bnd") {
        boundary(toks);
      } else if (kw == "sub") {
        if (toks.size() < 3 || toks[2].text != "=") fail(toks[0].column, "expected 'sub <name> = cells...'");
        if (doc_.sub(toks[1].text)) fail(toks[1].column, "duplicate subcomplex '" + toks[1].text + "'");
        chain::SubcomplexRef s{toks[1].text, {}};
        for (std::size_t i = 3; i < toks.size(); ++i) {
          const auto c = doc_.complex.find(toks[i].text);
          if (!c) fail(toks[i].column, "undeclared cell '" + toks[i].text + "'");
          for (auto prev : s.cells)
            if (prev == *c) fail(toks[i].column, "cell listed twice");
          s.cells.push_back(*c);
        }
        std::sort(s.cells.begin(), s.cells.end());
        doc_.subcomplexes.push_back(std::move(s));
      } else if (kw == "meta") {
        if (toks.size() < 3) fail(toks[0].column, "expected 'meta <key> <value>'");
        std::string value;
        for (std::size_t i = 2; i < toks.size(); ++i) value += (i > 2 ? " " : "") + toks[i].text;
        if (doc_.meta_value(toks[1].text)) fail(toks[1].column, "duplicate metadata key");
        doc_.meta.emplace_back(toks[1].text, value);
      } else {
        fail(toks[0].column, "unknown keyword '" + kw + "'");
      }
    }
    if (!seen_version) throw ParseError(lineno + 1, 1, "missing 'scx 1' header (empty or truncated file)");
    return std::move(doc_);
  }

private:
  [[noreturn]] void fail(std::size_t column, const std::string& what) const {
    throw ParseError(line_, column, what);
  }

  grp::Word word(const std::string& text, std::size_t column) const {
    std::size_t off = 0;
    try {
      return grp::Word::parse(text, doc_.complex.group().generators(), &off);
    } catch (const InputError& e) {
      fail(column + off, e.what());
    }
  }

  void boundary(const std::vector<Token>& toks) {
    if (toks.size() < 4 || toks[2].text != "=") fail(toks[0].column, "expected 'bnd <cell> = <terms>'");
    const auto c = doc_.complex.find(toks[1].text);
    if (!c) fail(toks[1].column, "undeclared cell '" + toks[1].text + "'");
    if (has_bnd_[*c]) fail(toks[1].column, "boundary of '" + toks[1].text + "' given twice");
    has_bnd_[*c] = true;
    std::vector<BoundaryTerm> terms;
    if (toks.size() == 4 && toks[3].text == "0") {
      set(*c, terms, toks[1].column);
      return;
    }
    bool expect_term = true;
    for (std::size_t i = 3; i < toks.size(); ++i) {
      const Token& t = toks[i];
      if (!expect_term) {
        if (t.text != "+") fail(t.column, "expected '+' between boundary terms");
        expect_term = true;
        continue;
      }
      expect_term = false;
      const auto a = t.text.find('*');
      const auto b = t.text.rfind('*');
      if (a == std::string::npos || a == b)
        fail(t.column, "boundary term must read <coeff>*<word>*<cell>");
      const std::string cs = t.text.substr(0, a);
      long coeff = 0;
      try {
        std::size_t used = 0;
        coeff = std::stol(cs, &used);
        if (used != cs.size()) throw std::invalid_argument("trailing");
      } catch (const std::logic_error&) {
        fail(t.column, "bad coefficient '" + cs + "'");
      }
      const std::string target = t.text.substr(b + 1);
      const auto tc = doc_.complex.find(target);
      if (!tc) fail(t.column + b + 1, "undeclared cell '" + target + "'");
      if (doc_.complex.cell(*tc).dim != doc_.complex.cell(*c).dim - 1)
        fail(t.column + b + 1, "dimension mismatch: '" + target + "' in boundary of '" +
                                   toks[1].text + "'");
      terms.push_back({coeff, word(t.text.substr(a + 1, b - a - 1), t.column + a + 1), *tc});
    }
    if (expect_term) fail(toks.back().column, "dangling '+' in boundary");
    set(*c, terms, toks[1].column);
  }

  void set(std::size_t c, std::vector<BoundaryTerm>& terms, std::size_t column) {
    try {
      doc_.complex.set_boundary(c, std::move(terms));
    } catch (const InputError& e) {
      fail(column, e.what());
    }
  }

  const std::string& text_;
  std::size_t line_ = 0;
  ScxDocument doc_;
  std::vector<bool> has_bnd_;
};

} // namespace

ScxDocument parse_scx(const std::string& text) { return Parser(text).run(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScxDocument load_scx(const std::string& path) { return parse_scx(read_file(path)); }

std::string serialize_scx(const ScxDocument& doc) {
  std::ostringstream os;
  for (const auto& h : doc.header) os << "#" << (h.empty() ? "" : " " + h) << "\n";
  os << "scx " << doc.version << "\n";
  const auto& g = doc.complex.group();
  if (g.generator_count() > 0) {
    os << "gen";
    for (const auto& n : g.generators()) os << " " << n;
    os << "\n";
  }
  for (const auto& r : g.relators()) os << "rel " << g.str(r) << "\n";
  for (const auto& c : doc.complex.cells()) os << "cell " << c.name << " dim " << c.dim << "\n";
  for (const auto& c : doc.complex.cells()) {
    if (c.dim == 0) continue;
    os << "bnd " << c.name << " =";
    if (c.boundary.empty()) os << " 0";
    for (std::size_t i = 0; i < c.boundary.size(); ++i) {
      const auto& t = c.boundary[i];
      os << (i ? " + " : " ") << t.coeff << "*" << g.str(t.word) << "*"
         << doc.complex.cell(t.cell).name;
    }
    os << "\n";
  }
  for (const auto& s : doc.subcomplexes) {
    os << "sub " << s.name << " =";
    for (auto c : s.cells) os << " " << doc.complex.cell(c).name;
    os << "\n";
  }
  for (const auto& [k, v] : doc.meta) os << "meta " << k << " " << v << "\n";
  return os.str();
}

void save_scx(const ScxDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << serialize_scx(doc);
}

} // namespace scx::io
