#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cobk {

enum class ErrorCode {
  InvalidArgument,
  Overflow,
  NotOrientationReversing,
  HasFixedPoints,
  LatticeNotInvariant,
  NotAnInvolution,
  UnsupportedFamily,
  NonzeroDegree,
  InternalInconsistency,
  NotNullHomologous,
  NotInKernel,
  InvalidDistribution,
  MissingTableEntry,
  BlockMapNotQuasilinear,
  NotInGeneratorSet,
  UnsupportedCoefficients,
  ZeroBlockForm,
  DimensionMismatch,
  NotIsotropic,
  ParseError,
};

const char* code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace cobk
