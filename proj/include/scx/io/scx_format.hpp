#pragma once

#include "scx/chain/complex.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scx::io {

/// Parsed SCX file. Comments other than the leading header block are not kept.
struct ScxDocument {
  int version = 1;
  std::vector<std::string> header; // leading comment lines, without "# "
  chain::EquivariantComplex complex;
  std::vector<chain::SubcomplexRef> subcomplexes;
  std::vector<std::pair<std::string, std::string>> meta;

  const chain::SubcomplexRef* sub(const std::string& name) const;
  const chain::SubcomplexRef& require_sub(const std::string& name) const;
  std::optional<std::string> meta_value(const std::string& key) const;
  /// Integer metadata (0/1 flags included); `fallback` when absent.
  long meta_int(const std::string& key, long fallback) const;
  void set_meta(const std::string& key, const std::string& value);

  friend bool operator==(const ScxDocument&, const ScxDocument&) = default;
};

/// Throws ParseError (line/column) on syntax errors and undeclared names.
ScxDocument parse_scx(const std::string& text);
ScxDocument load_scx(const std::string& path);
std::string serialize_scx(const ScxDocument& doc);
void save_scx(const ScxDocument& doc, const std::string& path);

std::string read_file(const std::string& path);

} // namespace scx::io
