#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xpk {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  EmptySet,
  CountTooLarge,
  IsolatedVertex,
  TooSmall,
  TooLarge,
  NoConvergence,
  Disconnected,
  InvalidParams,
  PreconditionDensity,
  PreconditionDegree,
  InternalInvariantViolated,
  HypothesisViolated,
  BiasTooLarge,
  IllegalMove,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library is an Error; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace xpk
