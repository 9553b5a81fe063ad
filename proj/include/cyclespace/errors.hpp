#pragma once

#include <stdexcept>
#include <string>

namespace cyclespace {

enum class ErrorCode {
  DisconnectedGraph,
  SelfLoop,
  ParallelEdge,
  NonpositiveWeight,
  UnsupportedParameter,
  SizeCapExceeded,
  DependentBasis,
  NotAnAutomorphism,
  NotClosed,
  GroupNotEnumerated,
  UnbalancedProblem,
  NotProbability,
  IdentityViolation,
  BadInput,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cyclespace
