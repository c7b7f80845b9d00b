#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netdist {

/// Failure categories surfaced by the library. The CLI maps these to exit codes.
enum class ErrorKind {
  SelfLoop,
  VertexOutOfRange,
  NonpositiveWeight,
  AsymmetricInput,
  EventOutOfRange,
  NotSymmetric,
  KOutOfRange,
  Disconnected,
  SingularSystem,
  NegativeAffinity,
  SizeMismatch,
  InvalidParams,
  UnsupportedModel,
  RetriesExhausted,
  DegenerateNull,
  EmptySample,
  SeriesTooShort,
  ZeroMean,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace netdist
