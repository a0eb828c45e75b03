#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wqo {

// Input outside the domain of an operation (unknown element, ordinal 0 where
// a limit or successor is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computation would exceed the caller-supplied bit or step budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The bit-length part of the budget was exceeded.
class BitBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

// A bounded search ran out of room without reaching a verdict.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wqo
