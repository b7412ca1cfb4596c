#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace neutro {

enum class ErrorKind {
  SchemeMismatch,
  NotTotal,
  NotFunctional,
  NotConsistent,
  OffGrid,
  UnknownAttribute,
  UnknownRelation,
  ProjectionNotSubset,
  MaterializationLimit,
  BudgetExceeded,
  SyntaxError,
  ParseError,
  DomainViolation,
  GradeOutOfRange,
  IoError,
};

std::string_view error_kind_name(ErrorKind kind);

class NeutroError : public std::runtime_error {
 public:
  NeutroError(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Query-text error carrying the source position and the tokens that would
/// have been legal at that point.
class QuerySyntaxError : public NeutroError {
 public:
  QuerySyntaxError(int line, int column, const std::string& message,
                   std::vector<std::string> expected);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_ = 0;
  int column_ = 0;
  std::vector<std::string> expected_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace neutro
