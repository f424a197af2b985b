#include "atomkit/error.hpp"

namespace atomkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::MissingInverse: return "MissingInverse";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::IdentityMissing: return "IdentityMissing";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::EngineMismatch: return "EngineMismatch";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

}  // namespace atomkit
