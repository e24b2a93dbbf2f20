#pragma once

#include <stdexcept>
#include <string>

namespace xist {

enum class ErrorCode {
  NegativeWeight,
  VertexOutOfRange,
  EmptySet,
  NonPositiveScale,
  SameVertex,
  DegeneratePartition,
  NotAPartition,
  SubsetTooSmall,
  TooManyClusters,
  TooLarge,
  PreconditionViolated,
  ParseError,
  BadGrid,
  LengthMismatch,
  IoError,
};

const char *to_string(ErrorCode code);

// Precondition and data errors. Algorithmic outcomes that the caller is
// expected to handle (degenerate V_loc, unreachable k) are reported through
// status fields instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace xist
