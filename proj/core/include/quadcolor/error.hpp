#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadcolor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed rotation system: missing/duplicate darts, bad involution, loops,
/// disconnected graph, or an impossible Euler characteristic.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Coloring does not fit the map, uses a value outside {1,2,3,4}, or is
/// improper where a proper coloring is required.
class ColoringError : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed. `line()` is 1-based, 0 when the error is
/// not tied to a particular line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a precondition on the map (e.g. being a quadrangulation) or an
/// argument does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace quadcolor
