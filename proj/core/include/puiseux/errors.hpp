#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace puiseux {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (zero denominator,
/// non-prime modulus, element outside the monoid, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotMemberError : public DomainError {
 public:
  using DomainError::DomainError;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a monoid-level rule (negative generator,
/// empty index range, stability claim that cannot be verified, ...).
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured factorization cap or grid size.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Symbolic mode was requested but the spec does not declare the metadata the
/// answer depends on.
class InsufficientMetadataError : public Error {
 public:
  using Error::Error;
};

}  // namespace puiseux
