#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qel {

// Bad arguments, out-of-range family parameters, malformed CLI input.
// The CLI maps this to exit status 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax or arity failure while reading a model document.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An enumeration was refused because it would exceed a fixed work budget.
// Carries the size report in what().
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A parametrization produced only zero vectors at every probe.
class DegenerateModelError : public std::runtime_error {
 public:
  explicit DegenerateModelError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qel
