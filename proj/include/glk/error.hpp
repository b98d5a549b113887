#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glk {

enum class ErrorCode {
  PrecisionMismatch,
  NotInvertible,
  InvalidArgument,
  NotSquarefree,
  NonCoprimeModuli,
  BadReduction,
  LimitExceeded,
  Ramified,
  Unsupported,
  MissingEntry,
  RamifiedDiscriminant,
  Reducible,
  EqualPrimes,
  NotNiceResidue,
  TwistMismatch,
  RelationViolated,
  NotNormalForm,
  NotACocycle,
  Uncorrectable,
  OrderDivisibleByP,
  InvalidLedger,
  Infeasible,
  ExhaustedStream,
  EmptySample,
  StageInvariantViolated,
  Unsatisfiable,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PrecisionMismatch: return "PrecisionMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::Ramified: return "Ramified";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::MissingEntry: return "MissingEntry";
    case ErrorCode::RamifiedDiscriminant: return "RamifiedDiscriminant";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::EqualPrimes: return "EqualPrimes";
    case ErrorCode::NotNiceResidue: return "NotNiceResidue";
    case ErrorCode::TwistMismatch: return "TwistMismatch";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::NotNormalForm: return "NotNormalForm";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::Uncorrectable: return "Uncorrectable";
    case ErrorCode::OrderDivisibleByP: return "OrderDivisibleByP";
    case ErrorCode::InvalidLedger: return "InvalidLedger";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ExhaustedStream: return "ExhaustedStream";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::StageInvariantViolated: return "StageInvariantViolated";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace glk
