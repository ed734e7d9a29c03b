#pragma once

#include <stdexcept>
#include <string>

namespace splicecert {

enum class ErrorCode {
  ParseError,
  StructureError,
  InvalidDiagram,
  UnknownVertex,
  UnknownEdge,
  EdgeNotInternal,
  SameLeaf,
  NotArrowhead,
  MultipleArrowheads,
  NonUnitMultiplicity,
  InfiniteGaps,
  TooLarge,
  Exceptional,
  NotMinimal,
  CaseExhausted,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the DSL parser; carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& what, int line, int column)
      : Error(code, what), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace splicecert
