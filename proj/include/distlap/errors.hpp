#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distlap {

/// Malformed textual graph input. `line()` is 1-based, 0 when not line oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Distances are undefined on a disconnected graph.
class DisconnectedGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bound or check whose hypotheses the input does not meet.
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical result contradicts a proven statement; signals a bug upstream.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace distlap
