#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpi {

enum class ErrorKind {
  InvalidOrder,
  InvalidGroup,
  Index,
  Declaration,
  Context,
  Substitution,
  Generator,
  Contract,
  Move,
  NotCongruent,
  NoExpression,
  NotApplicable,
  Parse,
  Certificate,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error in DSL input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace gpi
