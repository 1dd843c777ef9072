#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibrephi {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or setup text. `position` is a 0-based byte offset
/// into the parsed string; `line`/`column` are 1-based and only set by the
/// setup-file loader.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0,
             std::size_t column = 0)
      : Error(what), position_(position), line_(line), column_(column) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t position_;
  std::size_t line_;
  std::size_t column_;
};

class RingMismatch : public Error {
public:
  using Error::Error;
};

/// A configured cap (degree, term count, saturation exponent, recursion
/// depth) was exceeded. Never a silent truncation.
class ResourceError : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class InternalInconsistency : public Error {
public:
  using Error::Error;
};

} // namespace fibrephi
