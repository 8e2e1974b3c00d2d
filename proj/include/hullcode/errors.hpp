#pragma once
#include <stdexcept>
#include <string>

namespace hullcode {

// Malformed input text (field headers, matrix bodies, element literals).
// CLI exit code 3.
struct ParseError : std::runtime_error {
  int line;  // 1-based input line when known, 0 otherwise
  explicit ParseError(const std::string& msg, int line_no = 0)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                                       : msg),
        line(line_no) {}
};

// A documented precondition or named construction hypothesis does not hold
// for the given input. The message names the hypothesis and its witness
// value. CLI exit code 2.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exhaustive enumeration would exceed the configured budget.
// CLI exit code 4.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hullcode
