#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace locsym {

enum class ErrorKind {
  ZeroPolynomial,
  DegreeTooHigh,
  InvalidParametrization,
  NotAUnit,
  BasePointOnDivisor,
  CoincidentPoints,
  NonSplitFunction,
  NoRationalPointFound,
  UnsupportedDegree,
  PointNotOnCurve,
  UniformizerThroughPoint,
  NonUniquePreimage,
  RestrictionVanishes,
  NonRationalSite,
  HypothesisViolation,
  InternalInconsistency,
  SingularityOnPath,
  NoConvergence,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace locsym
