#include "fwcycles/error.hpp"

namespace fwc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DuplicateState: return "DuplicateState";
    case ErrorCode::AsymmetricEdge: return "AsymmetricEdge";
    case ErrorCode::RowSumExceedsOne: return "RowSumExceedsOne";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::UnknownStateInEdge: return "UnknownStateInEdge";
    case ErrorCode::ScaleOverflow: return "ScaleOverflow";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::ForeignState: return "ForeignState";
    case ErrorCode::NonpositiveBeta: return "NonpositiveBeta";
    case ErrorCode::LevelBelowStart: return "LevelBelowStart";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::AlreadyTerminal: return "AlreadyTerminal";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::StateOutsideCycle: return "StateOutsideCycle";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::InvalidCostFunction: return "InvalidCostFunction";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace fwc
