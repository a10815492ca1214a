#pragma once

#include <stdexcept>
#include <string>

namespace scx {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data (bad arity, undeclared names, inconsistent encodings).
class InputError : public Error {
public:
  using Error::Error;
};

/// A specialized boundary failed to square to zero.
class BoundaryError : public Error {
public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class SizeLimitError : public Error {
public:
  using Error::Error;
};

/// Syntax error with a 1-based position.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace scx
