#ifndef KNOTREP_ERRORS_HPP
#define KNOTREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotrep {

// Every recoverable failure in the library is reported through one of
// these codes so callers (and the CLI) can map failures to exit codes
// without string matching.
enum class ErrorCode {
  InvalidInput,
  InvalidGenerator,
  OutOfRange,
  MultiComponent,
  OddValue,
  NotRealizable,
  ArcDegree,
  InconsistentOrientation,
  BudgetExceeded,
  DegreeBudgetExceeded,
  RelatorSurvived,
  NotNested,
  UnsortedInput,
  Unsupported,
  InternalInvariant,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MultiComponent: return "MultiComponent";
    case ErrorCode::OddValue: return "OddValue";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::ArcDegree: return "ArcDegree";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case ErrorCode::RelatorSurvived: return "RelatorSurvived";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::UnsortedInput: return "UnsortedInput";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace knotrep

#endif
