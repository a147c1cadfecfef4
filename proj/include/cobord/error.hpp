#pragma once

#include <stdexcept>
#include <string>

namespace cobord {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched truncation caps or an out-of-range configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Index outside the truncation window.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug or a broken convention.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A generator construction or elimination had no solution.
class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

class NotDivisibleError : public Error {
 public:
  NotDivisibleError(int degree, const std::string& what)
      : Error(what), degree_(degree) {}
  /// First total degree at which a nonzero remainder appeared.
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cobord
