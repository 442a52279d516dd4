// Error codes shared by every lietwist module.

#ifndef LIETWIST_ERROR_HPP_
#define LIETWIST_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lietwist {

enum class ErrorCode {
  UnknownSeries,
  LatticeNotIntermediate,
  RankCapExceeded,
  NotASubsetOfRoots,
  SubsystemNotClosed,
  NotARoot,
  DimensionMismatch,
  OrderCapExceeded,
  MismatchedDatum,
  ShiftNotStable,
  DatumMismatch,
  NotDominant,
  Overflow,
  NotAntiInvariant,
  BadTwist,
  NotWHInvariant,
  InexactDivision,
  NotSpin,
  NotCSpinorial,
  NotLevi,
  NotHDominant,
  InternalInconsistency,
  WrongBasisSize,
  BadTwistPairing,
  DegenerateSample,
  NotInXH,
  LengthMismatch,
  SchemaViolation,
  ParseError,
};

// Stable, machine-readable name ("NotHDominant", ...). Never changes once published.
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

} // namespace lietwist

#endif
