#pragma once

#include <stdexcept>
#include <string>

namespace qg {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the mathematical domain of a function (x <= 0, |omega| >= 1, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Graph specification violates a structural invariant.
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Unsupported topology for the requested operation.
struct UnsupportedTopologyError : Error {
  explicit UnsupportedTopologyError(const std::string& msg) : Error(msg) {}
};

/// Root finding failed to deliver the requested number of states;
/// carries the scan trace in the message.
struct SolverError : Error {
  explicit SolverError(const std::string& msg) : Error(msg) {}
};

/// Two roots closer than the degeneracy threshold, or a boundary system
/// with a nullspace of dimension > 1.
struct DegeneracyError : Error {
  explicit DegeneracyError(const std::string& msg) : Error(msg) {}
};

/// Assembled state fails the boundary-condition residual check.
struct InconsistentStateError : Error {
  explicit InconsistentStateError(const std::string& msg) : Error(msg) {}
};

/// Composite quadrature failed to converge within the refinement budget.
struct QuadratureError : Error {
  explicit QuadratureError(const std::string& msg) : Error(msg) {}
};

}  // namespace qg
