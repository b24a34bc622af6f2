#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qvira {

enum class ErrorCode {
  ZeroDenominator,
  DivisionByZero,
  PoleAtPoint,
  NotQuadratic,
  SyntaxError,
  SemanticError,
  IndexZero,
  BadParameter,
  Degenerate,
  MissingData,
  ZeroEntry,
  SingularFit,
  ZeroSample,
  InvalidContext,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for every failure surfaced by the library; the code
/// identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure. `line` is 0 for single-expression input; `column` is the
/// 1-based character position within the line (or within the expression).
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& expected)
      : Error(ErrorCode::SyntaxError, describe(line, column, expected)),
        line_(line),
        column_(column),
        expected_(expected) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  static std::string describe(std::size_t line, std::size_t column, const std::string& expected) {
    std::string where = line == 0 ? "position " + std::to_string(column)
                                  : "line " + std::to_string(line) + ", column " + std::to_string(column);
    return where + ": expected " + expected;
  }

  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace qvira
