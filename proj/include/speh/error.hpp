#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace speh {

enum class ErrorCode {
  InvalidRank,
  RankMismatch,
  NotInvertible,
  NotSkewSymmetric,
  UnsupportedForm,
  NotRootStable,
  InvalidBase,
  InvalidSubset,
  OddRank,
  NotRepresentative,
  Case1Absent,
  NonSimplicialCone,
  DimensionMismatch,
  InvalidPartition,
  InvalidParameter,
  PreconditionViolation,
  OracleTooLarge,
  ParseError,
  Internal,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidRank: return "invalid-rank";
    case ErrorCode::RankMismatch: return "rank-mismatch";
    case ErrorCode::NotInvertible: return "not-invertible";
    case ErrorCode::NotSkewSymmetric: return "not-skew-symmetric";
    case ErrorCode::UnsupportedForm: return "unsupported-form";
    case ErrorCode::NotRootStable: return "not-root-stable";
    case ErrorCode::InvalidBase: return "invalid-base";
    case ErrorCode::InvalidSubset: return "invalid-subset";
    case ErrorCode::OddRank: return "odd-rank";
    case ErrorCode::NotRepresentative: return "not-representative";
    case ErrorCode::Case1Absent: return "case1-absent";
    case ErrorCode::NonSimplicialCone: return "non-simplicial-cone";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::InvalidPartition: return "invalid-partition";
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::PreconditionViolation: return "precondition-violation";
    case ErrorCode::OracleTooLarge: return "oracle-too-large";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace speh
