#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conicmap {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The cone does not meet the sphere the way the construction requires.
class ConditionViolation : public Error {
 public:
  using Error::Error;
};

/// The requested geometry exists but is not represented (cylinders,
/// apex below the north pole, apex inside the sphere).
class UnsupportedGeometry : public Error {
 public:
  using Error::Error;
};

class NoIntersection : public Error {
 public:
  using Error::Error;
};

class TangentIntersection : public Error {
 public:
  using Error::Error;
};

/// A meridian profile has a vanishing or negative stretch on its range.
class NonPositiveStretch : public Error {
 public:
  using Error::Error;
};

class OutOfAnnulus : public Error {
 public:
  using Error::Error;
};

class OnCutMeridian : public Error {
 public:
  using Error::Error;
};

class InvalidKind : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input with semantically invalid content.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace conicmap
