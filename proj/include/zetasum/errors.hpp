#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetasum {

/// Argument outside the mathematical domain of an operation (x <= 0 for
/// ln_gamma, m <= 0 for digit counts, a pole of g_value, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested accuracy cannot be delivered: quadrature node budget
/// exhausted, height above the supported range, precision too low for n.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A zero table failed parsing or validation. `line()` is 1-based, 0 when
/// the failure is not tied to a line (count check).
class ZeroTableError : public std::runtime_error {
 public:
  ZeroTableError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The zero finder's count check failed even after rescanning.
class MissedZeroError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zetasum
