#include "miquel/errors.hpp"

namespace miquel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::CoincidentLines: return "CoincidentLines";
    case ErrorKind::CollinearPoints: return "CollinearPoints";
    case ErrorKind::PointAtInfinity: return "PointAtInfinity";
    case ErrorKind::DegenerateConic: return "DegenerateConic";
    case ErrorKind::IdenticalCircles: return "IdenticalCircles";
    case ErrorKind::KnownPointNotIncident: return "KnownPointNotIncident";
    case ErrorKind::NotACircle: return "NotACircle";
    case ErrorKind::InvalidMetric: return "InvalidMetric";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::MalformedSidePoint: return "MalformedSidePoint";
    case ErrorKind::DegenerateQ: return "DegenerateQ";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
    case ErrorKind::DegenerateCircle: return "DegenerateCircle";
    case ErrorKind::CollinearUVW: return "CollinearUVW";
    case ErrorKind::MiquelVerificationFailed: return "MiquelVerificationFailed";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

ErrorCategory category(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidMetric:
    case ErrorKind::InvalidConfig:
    case ErrorKind::MalformedSidePoint:
      return ErrorCategory::InvalidInput;
    case ErrorKind::ZeroVector:
    case ErrorKind::CoincidentPoints:
    case ErrorKind::CoincidentLines:
    case ErrorKind::CollinearPoints:
    case ErrorKind::PointAtInfinity:
    case ErrorKind::DegenerateConic:
    case ErrorKind::IdenticalCircles:
    case ErrorKind::NotACircle:
    case ErrorKind::DegenerateQ:
    case ErrorKind::DegeneratePoint:
    case ErrorKind::DegenerateCircle:
    case ErrorKind::CollinearUVW:
      return ErrorCategory::Degeneracy;
    case ErrorKind::KnownPointNotIncident:
    case ErrorKind::MiquelVerificationFailed:
    case ErrorKind::VerificationFailed:
      return ErrorCategory::CheckFailure;
    case ErrorKind::BudgetExceeded:
      return ErrorCategory::Budget;
    case ErrorKind::UnboundVariable:
    case ErrorKind::ExponentOverflow:
      return ErrorCategory::Internal;
  }
  return ErrorCategory::Internal;
}

}  // namespace miquel
