#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace waring {

enum class ErrorKind {
  DivisionByZero,
  ContextMismatch,
  ZeroValuation,
  PoleAtZero,
  ArityMismatch,
  OrderOutOfRange,
  ZeroInput,
  LimitDoesNotExist,
  NotLocal,
  DegreeTooLow,
  CrossClassCancellation,
  LocalStructureViolation,
  ProportionalForms,
  SynthesisError,
  InvalidFamily,
  ConductorTooLarge,
  ParseError,
  Usage,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::ZeroValuation: return "ZeroValuation";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::LimitDoesNotExist: return "LimitDoesNotExist";
    case ErrorKind::NotLocal: return "NotLocal";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::CrossClassCancellation: return "CrossClassCancellation";
    case ErrorKind::LocalStructureViolation: return "LocalStructureViolation";
    case ErrorKind::ProportionalForms: return "ProportionalForms";
    case ErrorKind::SynthesisError: return "SynthesisError";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::ConductorTooLarge: return "ConductorTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace waring
