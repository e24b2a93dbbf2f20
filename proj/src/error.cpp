#include "xist/error.hpp"

namespace xist {

const char *to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::DegeneratePartition: return "DegeneratePartition";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::SubsetTooSmall: return "SubsetTooSmall";
    case ErrorCode::TooManyClusters: return "TooManyClusters";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace xist
