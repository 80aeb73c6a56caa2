#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace critgraph {

enum class ErrorKind {
  DisconnectedInput,
  TooSmall,
  SameVertex,
  EdgeAbsent,
  NotTwoConnected,
  BadAnchor,
  HypothesisViolated,
  NotFound,
  BudgetExceeded,
  NotCritical,
  NoTwoCut,
  BadParameters,
  ScaleGuard,
  UnknownCheck,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type;
/// callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry the 1-based input line that triggered them.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace critgraph
