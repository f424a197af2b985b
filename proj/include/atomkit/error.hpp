#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atomkit {

enum class ErrorCode {
  NoIdentity,
  NotAssociative,
  MissingInverse,
  NotLatinSquare,
  OrderCapExceeded,
  EmptyGeneratorSet,
  UniverseMismatch,
  EmptySet,
  PreconditionViolated,
  IdentityMissing,
  NotGenerating,
  NotASubgroup,
  EngineMismatch,
  UnknownFamily,
  ParseError,
  InvalidConfig,
  InvalidArgument,
  // A proved statement failed on a concrete instance.
  InvariantViolated,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace atomkit
