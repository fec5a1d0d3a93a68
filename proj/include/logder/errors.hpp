#pragma once

#include <stdexcept>
#include <string>

namespace logder {

/// Caller violated an operation's contract (mixed fields, degree mismatch, ...).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Division by zero in a field.
class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An exact division left a remainder, or a result contradicts a theorem the
/// algorithms rely on. Always indicates a broken precondition upstream.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// No form in the search ladder satisfied the genericity condition.
class NoGenericFormError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace logder
