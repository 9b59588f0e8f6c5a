#pragma once

#include <stdexcept>
#include <string>

namespace hilb {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (ring documents, polynomials, integer lists).
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// A precondition on a mathematical operation does not hold
/// (ring mismatch, non-m-primary ideal, K = R, gcd != 1, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A configurable resource cap was hit (S-pair budget, oversemigroup
/// gap cap, postulation horizon). Never a silent truncation.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// The stabilization horizon was reached before the Hilbert function
/// agreed with a polynomial. A first-class outcome, not a crash.
class PostulationError : public BudgetError {
public:
  using BudgetError::BudgetError;
};

/// A provable identity failed or an impossible state was reached.
/// Signals a defect in the engine, not in the input.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace hilb
