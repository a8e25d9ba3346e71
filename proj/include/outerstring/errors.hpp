#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace outerstring {

enum class ErrorKind {
  DuplicateBasepoint,
  BaselineViolation,
  MalformedCurve,
  DegenerateIntersection,
  DegenerateProbe,
  UnknownCurve,
  OrderViolation,
  UncoveredCurve,
  SideOrderViolation,
  UnhitCurve,
  UnusedSupport,
  InvalidSkeleton,
  NotAClique,
  InconsistentSide,
  NotCrossing,
  InvalidCliqueSystem,
  PreconditionFailure,
  InternalContradiction,
  GenerationFailure,
  BoundTooLarge,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every library error; `kind()` names the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace outerstring
