#include "lietwist/error.hpp"

namespace lietwist {

std::string_view code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::UnknownSeries: return "UnknownSeries";
  case ErrorCode::LatticeNotIntermediate: return "LatticeNotIntermediate";
  case ErrorCode::RankCapExceeded: return "RankCapExceeded";
  case ErrorCode::NotASubsetOfRoots: return "NotASubsetOfRoots";
  case ErrorCode::SubsystemNotClosed: return "SubsystemNotClosed";
  case ErrorCode::NotARoot: return "NotARoot";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
  case ErrorCode::MismatchedDatum: return "MismatchedDatum";
  case ErrorCode::ShiftNotStable: return "ShiftNotStable";
  case ErrorCode::DatumMismatch: return "DatumMismatch";
  case ErrorCode::NotDominant: return "NotDominant";
  case ErrorCode::Overflow: return "Overflow";
  case ErrorCode::NotAntiInvariant: return "NotAntiInvariant";
  case ErrorCode::BadTwist: return "BadTwist";
  case ErrorCode::NotWHInvariant: return "NotWHInvariant";
  case ErrorCode::InexactDivision: return "InexactDivision";
  case ErrorCode::NotSpin: return "NotSpin";
  case ErrorCode::NotCSpinorial: return "NotCSpinorial";
  case ErrorCode::NotLevi: return "NotLevi";
  case ErrorCode::NotHDominant: return "NotHDominant";
  case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  case ErrorCode::WrongBasisSize: return "WrongBasisSize";
  case ErrorCode::BadTwistPairing: return "BadTwistPairing";
  case ErrorCode::DegenerateSample: return "DegenerateSample";
  case ErrorCode::NotInXH: return "NotInXH";
  case ErrorCode::LengthMismatch: return "LengthMismatch";
  case ErrorCode::SchemaViolation: return "SchemaViolation";
  case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

} // namespace lietwist
