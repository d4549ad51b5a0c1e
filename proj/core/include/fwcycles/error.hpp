#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fwc {

enum class ErrorCode {
  MalformedInput,
  DuplicateState,
  AsymmetricEdge,
  RowSumExceedsOne,
  DisconnectedGraph,
  UnknownStateInEdge,
  ScaleOverflow,
  EmptySet,
  ForeignState,
  NonpositiveBeta,
  LevelBelowStart,
  NotACycle,
  UnknownClass,
  AlreadyTerminal,
  NonTermination,
  TooLarge,
  InvalidSpec,
  StateOutsideCycle,
  ArithmeticOverflow,
  InvalidCostFunction,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them onto stable exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fwc
