#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  /// Semantic error without a source position.
  explicit ParseError(const std::string& what) : Error(what), line_(0), column_(0) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation was called outside its domain (non-coprime slope, non-invariant input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The filling slope is a slope of the relation's Newton polygon.
class NotReducible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// compute_annihilator was asked for the zero vector.
class ZeroGenerator : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

class Cancelled : public Error {
 public:
  Cancelled() : Error("computation cancelled") {}
};

}  // namespace skein
