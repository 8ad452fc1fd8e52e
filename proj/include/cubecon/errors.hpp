#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubecon {

// Two operands live in cubes of different dimension. Always a caller bug.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

// Malformed input. Line and column are 1-based; 0 means "not applicable".
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what, std::size_t line = 0,
                           std::size_t column = 0)
      : std::invalid_argument(decorate(what, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string decorate(const std::string& what, std::size_t line,
                              std::size_t column) {
    if (line == 0) return what;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

// A computation would exceed a configured size guard (2^n scan, 2^Cs
// expansion). `flag()` names the CLI option that lifts the guard.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::string flag)
      : std::runtime_error(what + " (raise the limit with " + flag + ")"),
        flag_(std::move(flag)) {}

  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string flag_;
};

// A library contract was broken at runtime, e.g. a consensus function
// returned an empty winner set.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cubecon
