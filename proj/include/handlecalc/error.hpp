#pragma once

#include <stdexcept>
#include <string>

namespace hcalc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (word grammar, JSON schema). `where` is a JSON
// pointer or a token offset, empty when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string where = {})
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// A rule or strategy was applied outside its hypotheses.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string rule, const std::string& what)
      : Error(rule + ": " + what), rule_(std::move(rule)) {}
  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

// A value violates a type invariant (e.g. a handle whose words do not commute).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Degrees of two operands disagree.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

// A strategy exceeded its step budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hcalc
