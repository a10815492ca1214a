#include "scx/grp/group.hpp"

#include "scx/error.hpp"

#include <cctype>

namespace scx::grp {

Word::Word(const std::vector<Letter>& letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw Error("letter exponent must be +-1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::generator(std::size_t gen, int power) {
  std::vector<Letter> ls(static_cast<std::size_t>(power < 0 ? -power : power),
                         Letter{gen, power < 0 ? -1 : 1});
  return Word(ls);
}

std::optional<std::size_t> Word::max_generator() const {
  std::optional<std::size_t> best;
  for (const auto& l : letters_)
    if (!best || l.gen > *best) best = l.gen;
  return best;
}

long Word::exponent_sum(std::size_t gen) const {
  long s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->exp});
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> ls = a.letters_;
  ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
  return Word(ls);
}

std::string Word::str(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const long power = static_cast<long>(j - i) * letters_[i].exp;
    if (!out.empty()) out += '*';
    if (letters_[i].gen >= names.size()) throw Error("word uses an unnamed generator");
    out += names[letters_[i].gen];
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(first) && s[0] != '_') return false;
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && ch != '_' && ch != '.') return false;
  }
  return true;
}

Word Word::parse(const std::string& text, const std::vector<std::string>& names,
                 std::size_t* error_offset) {
  auto fail = [&](std::size_t at, const std::string& why) -> Word {
    if (error_offset) *error_offset = at;
    throw InputError(why);
  };
  if (text == "1") return Word();
  if (text.empty()) return fail(0, "empty word");
  std::vector<Letter> ls;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string::npos) end = text.size();
    const std::string tok = text.substr(pos, end - pos);
    if (tok.empty()) return fail(pos, "empty factor in word '" + text + "'");
    const std::size_t caret = tok.find('^');
    const std::string name = tok.substr(0, caret);
    long power = 1;
    if (caret != std::string::npos) {
      const std::string e = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        power = std::stol(e, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (e.empty() || used != e.size() || !(std::isdigit(static_cast<unsigned char>(e.back()))))
        return fail(pos + caret + 1, "bad exponent in '" + tok + "'");
      if (power > 100000 || power < -100000) return fail(pos + caret + 1, "exponent too large");
    }
    if (name == "1" && caret == std::string::npos) {
      // identity factor
    } else {
      std::size_t gen = names.size();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) gen = i;
      if (gen == names.size()) return fail(pos, "unknown generator '" + name + "'");
      for (long k = 0; k < (power < 0 ? -power : power); ++k)
        ls.push_back({gen, power < 0 ? -1 : 1});
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return Word(ls);
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators,
                                     std::vector<Word> relators) {
  for (const auto& g : generators) add_generator(g);
  for (const auto& r : relators) add_relator(r);
}

std::optional<std::size_t> GroupPresentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t GroupPresentation::add_generator(const std::string& name) {
  if (!is_identifier(name)) throw InputError("invalid generator name '" + name + "'");
  if (index_of(name)) throw InputError("duplicate generator '" + name + "'");
  names_.push_back(name);
  return names_.size() - 1;
}

void GroupPresentation::check_relator(const Word& w) const {
  const auto mg = w.max_generator();
  if (mg && *mg >= names_.size()) throw InputError("relator uses an undeclared generator");
}

void GroupPresentation::add_relator(const Word& w) {
  check_relator(w);
  relators_.push_back(w);
}

} // namespace scx::grp
