#pragma once

#include "scx/io/scx_format.hpp"
#include "scx/sutured/sutured.hpp"

#include <string>

inline std::string data_path(const std::string& name) { return std::string(SCX_DATA_DIR) + "/" + name; }

inline scx::io::ScxDocument load_doc(const std::string& name) { return scx::io::load_scx(data_path(name)); }

inline scx::sutured::SuturedComplex load_sutured(const std::string& name) {
  return scx::sutured::SuturedComplex::from_document(load_doc(name));
}
