#pragma once

#include <stdexcept>
#include <string>

namespace eightvx {

// Stable error categories; the CLI maps these onto process exit codes.
enum class ErrorCode {
  Parse,
  Region,
  Infeasible,
  BudgetExhausted,
  TooLarge,
  InvalidPattern,
  InvalidPairing,
  ZeroWeightState,
  LogOverflow,
  Internal,
};

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

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Region: return "Region";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidPattern: return "InvalidPattern";
    case ErrorCode::InvalidPairing: return "InvalidPairing";
    case ErrorCode::ZeroWeightState: return "ZeroWeightState";
    case ErrorCode::LogOverflow: return "LogOverflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace eightvx
