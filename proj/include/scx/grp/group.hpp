#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace scx::grp {

struct Letter {
  std::size_t gen;
  int exp; // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the generators of a presentation.
class Word {
public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);

  static Word generator(std::size_t gen, int power = 1);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  /// Largest generator index used, nullopt for the identity.
  std::optional<std::size_t> max_generator() const;
  long exponent_sum(std::size_t gen) const;

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);

  /// Runs collapsed: "x^2*y^-1"; the identity prints as "1".
  std::string str(const std::vector<std::string>& names) const;
  /// Accepts "1", "x", "x^-1", "x^3*y" ...; throws InputError on bad syntax or
  /// unknown names. `error_offset` receives the character offset of a failure.
  static Word parse(const std::string& text, const std::vector<std::string>& names,
                    std::size_t* error_offset = nullptr);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

/// Valid generator identifier: letter or '_' first, then [A-Za-z0-9_.].
bool is_identifier(const std::string& s);

class GroupPresentation {
public:
  GroupPresentation() = default;
  GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators);

  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  std::size_t add_generator(const std::string& name);
  void add_relator(const Word& w);

  Word parse_word(const std::string& text) const { return Word::parse(text, names_); }
  std::string str(const Word& w) const { return w.str(names_); }

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

private:
  void check_relator(const Word& w) const;

  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

} // namespace scx::grp
