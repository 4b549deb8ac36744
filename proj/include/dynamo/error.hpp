#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dynamo {

using Vertex = std::size_t;

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  ZeroInDegree,
  EmptySet,
  NotBefore,
  NotStronglyConnected,
  TwoCyclePresent,
  NotBalanced,
  NoProgressingMove,
  TooLarge,
  IsolatedVertex,
  InvalidArgument,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::ZeroInDegree: return "ZeroInDegree";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotBefore: return "NotBefore";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::TwoCyclePresent: return "TwoCyclePresent";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::NoProgressingMove: return "NoProgressingMove";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Exception carrying a machine-checkable code. `first`/`second` hold the
/// offending vertices when the error names them (e.g. the pair of a
/// duplicate edge); otherwise they are npos.
class Error : public std::runtime_error {
 public:
  static constexpr Vertex npos = static_cast<Vertex>(-1);

  Error(ErrorCode code, const std::string& what, Vertex first = npos,
        Vertex second = npos)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        first_(first),
        second_(second) {}

  ErrorCode code() const noexcept { return code_; }
  Vertex first() const noexcept { return first_; }
  Vertex second() const noexcept { return second_; }

 private:
  ErrorCode code_;
  Vertex first_;
  Vertex second_;
};

}  // namespace dynamo
