#pragma once

#include <stdexcept>
#include <string>

namespace wcentropy {

// Argument outside the support of a function (e.g. x < 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid family parameter, sample, or configuration.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input; carries the 1-based line and column of the fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An improper integral did not settle under successive doublings of its range.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The weight function fails the integrability condition that the almost-sure
// convergence result requires; experiments relying on it refuse to run.
class IntegrabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wcentropy
