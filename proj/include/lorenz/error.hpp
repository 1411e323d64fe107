#pragma once

#include <stdexcept>
#include <string>

namespace lorenz {

enum class ErrorCode {
  // word parsing
  EmptyWord,
  InvalidLetter,
  SingleLetterWord,
  PeriodicWord,
  // closed-form invariants
  IntegralityViolation,
  NegativeGenus,
  // grid construction and queries
  ConstructionFailure,
  MultipleComponents,
  NotLorenz,
  ShortShortCrossing,
  NonIntegerGrading,
  UnknownFormat,
  BadGridData,
  // unknotting procedure
  ProcedureMismatch,
  // braid / polynomial oracle
  InexactDivision,
  MultiComponent,
  ArithmeticOverflow,
  // enumeration
  BoundTooLarge,
  // internal consistency (tie in rotation order, etc.)
  InternalError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // true for errors caused by user input rather than an internal bug
  bool is_input_error() const noexcept {
    switch (code_) {
      case ErrorCode::EmptyWord:
      case ErrorCode::InvalidLetter:
      case ErrorCode::SingleLetterWord:
      case ErrorCode::PeriodicWord:
      case ErrorCode::UnknownFormat:
      case ErrorCode::BadGridData:
      case ErrorCode::NotLorenz:
      case ErrorCode::MultipleComponents:
      case ErrorCode::BoundTooLarge:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace lorenz
