#pragma once

#include <stdexcept>
#include <string>

namespace coblekit {

enum class ErrorKind {
  DimensionMismatch,
  InvalidArgument,
  NotHomogeneous,
  WrongDegree,
  NotOnHypersurface,
  NotSingular,
  SignedElement,
  NotStabilized,
  DegenerateHyperplane,
  LineContained,
  NodeCollision,
  NoGeneralPosition,
  SquareRootFailure,
  NoBipartition,
  OrderBoundExceeded,
  ParseError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::NotHomogeneous: return "non-homogeneous input";
    case ErrorKind::WrongDegree: return "wrong degree";
    case ErrorKind::NotOnHypersurface: return "point not on the hypersurface";
    case ErrorKind::NotSingular: return "point not singular";
    case ErrorKind::SignedElement: return "signed element present";
    case ErrorKind::NotStabilized: return "group does not stabilize the form";
    case ErrorKind::DegenerateHyperplane: return "form proportional to s1";
    case ErrorKind::LineContained: return "line contained";
    case ErrorKind::NodeCollision: return "node collision";
    case ErrorKind::NoGeneralPosition: return "no 5 nodes in general position";
    case ErrorKind::SquareRootFailure: return "square-root failure";
    case ErrorKind::NoBipartition: return "no bipartition";
    case ErrorKind::OrderBoundExceeded: return "order bound exceeded";
    case ErrorKind::ParseError: return "parse error";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(coblekit::to_string(kind)) +
                           (detail.empty() ? "" : ": " + detail)),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coblekit
