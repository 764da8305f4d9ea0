#include "cobk/errors.hpp"

namespace cobk {

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotOrientationReversing: return "NotOrientationReversing";
    case ErrorCode::HasFixedPoints: return "HasFixedPoints";
    case ErrorCode::LatticeNotInvariant: return "LatticeNotInvariant";
    case ErrorCode::NotAnInvolution: return "NotAnInvolution";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::NonzeroDegree: return "NonzeroDegree";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotNullHomologous: return "NotNullHomologous";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::MissingTableEntry: return "MissingTableEntry";
    case ErrorCode::BlockMapNotQuasilinear: return "BlockMapNotQuasilinear";
    case ErrorCode::NotInGeneratorSet: return "NotInGeneratorSet";
    case ErrorCode::UnsupportedCoefficients: return "UnsupportedCoefficients";
    case ErrorCode::ZeroBlockForm: return "ZeroBlockForm";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(ErrorCode::ParseError,
            what + " at position " + std::to_string(position)),
      position_(position) {}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cobk
