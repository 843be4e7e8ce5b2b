#include "gpi/error.hpp"

namespace gpi {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::InvalidGroup: return "invalid-group";
    case ErrorKind::Index: return "index";
    case ErrorKind::Declaration: return "declaration";
    case ErrorKind::Context: return "context";
    case ErrorKind::Substitution: return "substitution";
    case ErrorKind::Generator: return "generator";
    case ErrorKind::Contract: return "contract";
    case ErrorKind::Move: return "move";
    case ErrorKind::NotCongruent: return "not-congruent";
    case ErrorKind::NoExpression: return "no-expression";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Certificate: return "certificate";
  }
  return "unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::Parse,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace gpi
