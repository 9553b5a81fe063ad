#include "cyclespace/errors.hpp"

namespace cyclespace {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::GroupNotEnumerated: return "GroupNotEnumerated";
    case ErrorCode::UnbalancedProblem: return "UnbalancedProblem";
    case ErrorCode::NotProbability: return "NotProbability";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace cyclespace
