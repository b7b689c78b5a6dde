#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace miquel {

enum class ErrorKind {
  // exact kernel
  ZeroVector,
  UnboundVariable,
  ExponentOverflow,
  BudgetExceeded,
  ParseError,
  // areal geometry
  CoincidentPoints,
  CoincidentLines,
  CollinearPoints,
  PointAtInfinity,
  DegenerateConic,
  IdenticalCircles,
  KnownPointNotIncident,
  NotACircle,
  InvalidMetric,
  // construction pipeline
  InvalidConfig,
  MalformedSidePoint,
  DegenerateQ,
  DegeneratePoint,
  DegenerateCircle,
  CollinearUVW,
  MiquelVerificationFailed,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind);

/// Coarse grouping used for CLI exit codes.
enum class ErrorCategory { InvalidInput, Degeneracy, CheckFailure, Budget, Internal };

ErrorCategory category(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}
  Error(ErrorKind kind, std::string construction, const std::string& message)
      : std::runtime_error(construction + ": " + std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        construction_(std::move(construction)) {}

  ErrorKind kind() const { return kind_; }
  /// Name of the figure construction that failed; empty for bare kernel errors.
  const std::string& construction() const { return construction_; }

 private:
  ErrorKind kind_;
  std::string construction_;
};

}  // namespace miquel
