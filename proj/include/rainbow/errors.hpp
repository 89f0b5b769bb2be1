#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

/// Malformed input: unparseable text, duplicate pairs, self-loops, out-of-range vertices.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure at a known line of a text input.
class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A documented precondition of an operation does not hold (e.g. n < 3k).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed its configured instance budget.
class BudgetExceeded : public PreconditionError {
 public:
  BudgetExceeded(const std::string& what, double estimate)
      : PreconditionError(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

}  // namespace rainbow
