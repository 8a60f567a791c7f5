#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace cforge {

enum class ErrorCode {
  Syntax,
  UnknownIdentifier,
  DivisionByZero,
  BadField,
  ArityMismatch,
  FieldMismatch,
  DegreeMismatch,
  NotHomogeneous,
  DegreeAboveBound,
  ResourceBudget,
  InvalidInput,
  Unverified,
  Overflow,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::UnknownIdentifier: return "unknown-identifier";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::BadField: return "bad-field";
    case ErrorCode::ArityMismatch: return "arity-mismatch";
    case ErrorCode::FieldMismatch: return "field-mismatch";
    case ErrorCode::DegreeMismatch: return "degree-mismatch";
    case ErrorCode::NotHomogeneous: return "not-homogeneous";
    case ErrorCode::DegreeAboveBound: return "degree-above-bound";
    case ErrorCode::ResourceBudget: return "resource-budget";
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::Unverified: return "unverified";
    case ErrorCode::Overflow: return "overflow";
  }
  return "unknown";
}

/// Domain error carrying a stable code and, for parse errors, a
/// character position into the offending text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::move(message)),
        code_(code),
        position_(position) {}

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> position() const { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace cforge
