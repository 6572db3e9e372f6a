#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace krull {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two finite values of different rank met in one comparison or sum.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

// Bad input text. `column` is 1-based and counts bytes.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& what)
      : Error("column " + std::to_string(column) + ": " + what), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// Incompatible domain tag / valuation spec / harness settings.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (zero polynomial, ∞ where a
// finite value is required, division by zero, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A criterion does not apply to the given input (e.g. a0 = 0 for the
// lower-bound criterion).
class InapplicableError : public Error {
 public:
  using Error::Error;
};

// A self-check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace krull
