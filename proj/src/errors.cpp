#include "outerstring/errors.hpp"

namespace outerstring {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateBasepoint: return "DuplicateBasepoint";
    case ErrorKind::BaselineViolation: return "BaselineViolation";
    case ErrorKind::MalformedCurve: return "MalformedCurve";
    case ErrorKind::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorKind::DegenerateProbe: return "DegenerateProbe";
    case ErrorKind::UnknownCurve: return "UnknownCurve";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::UncoveredCurve: return "UncoveredCurve";
    case ErrorKind::SideOrderViolation: return "SideOrderViolation";
    case ErrorKind::UnhitCurve: return "UnhitCurve";
    case ErrorKind::UnusedSupport: return "UnusedSupport";
    case ErrorKind::InvalidSkeleton: return "InvalidSkeleton";
    case ErrorKind::NotAClique: return "NotAClique";
    case ErrorKind::InconsistentSide: return "InconsistentSide";
    case ErrorKind::NotCrossing: return "NotCrossing";
    case ErrorKind::InvalidCliqueSystem: return "InvalidCliqueSystem";
    case ErrorKind::PreconditionFailure: return "PreconditionFailure";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
    case ErrorKind::GenerationFailure: return "GenerationFailure";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace outerstring
