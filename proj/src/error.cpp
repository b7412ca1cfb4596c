#include "neutro/error.hpp"

namespace neutro {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SchemeMismatch: return "scheme mismatch";
    case ErrorKind::NotTotal: return "not total";
    case ErrorKind::NotFunctional: return "not functional";
    case ErrorKind::NotConsistent: return "not consistent";
    case ErrorKind::OffGrid: return "off grid";
    case ErrorKind::UnknownAttribute: return "unknown attribute";
    case ErrorKind::UnknownRelation: return "unknown relation";
    case ErrorKind::ProjectionNotSubset: return "projection not a subset";
    case ErrorKind::MaterializationLimit: return "materialization limit";
    case ErrorKind::BudgetExceeded: return "budget exceeded";
    case ErrorKind::SyntaxError: return "syntax error";
    case ErrorKind::ParseError: return "parse error";
    case ErrorKind::DomainViolation: return "domain violation";
    case ErrorKind::GradeOutOfRange: return "grade out of range";
    case ErrorKind::IoError: return "io error";
  }
  return "error";
}

NeutroError::NeutroError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

QuerySyntaxError::QuerySyntaxError(int line, int column, const std::string& message,
                                   std::vector<std::string> expected)
    : NeutroError(ErrorKind::SyntaxError,
                  "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

void fail(ErrorKind kind, const std::string& message) { throw NeutroError(kind, message); }

}  // namespace neutro
