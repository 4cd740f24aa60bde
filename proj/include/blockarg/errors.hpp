#pragma once

#include <stdexcept>
#include <string>

namespace blockarg {

enum class ErrorCode {
  CyclicDefinition,
  DanglingName,
  DuplicateChild,
  EmptyBlock,
  InvalidEdge,
  UnitaryPosition,
  UnknownPosition,
  SizeCapExceeded,
  OracleCapExceeded,
  NotComplete,
  DomainMismatch,
  NonTerminating,
  ParseError,
  Timeout,
  BadInput,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::CyclicDefinition: return "CyclicDefinition";
    case ErrorCode::DanglingName: return "DanglingName";
    case ErrorCode::DuplicateChild: return "DuplicateChild";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::UnitaryPosition: return "UnitaryPosition";
    case ErrorCode::UnknownPosition: return "UnknownPosition";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blockarg
