#pragma once

#include <stdexcept>
#include <string>

namespace levylab {

/// A parameter or argument lies outside the mathematical domain of an
/// operation.  `field()` names the offending parameter so callers (and the
/// CLI error reporter) can point at it.
class OutOfDomain : public std::invalid_argument {
 public:
  OutOfDomain(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Two distributions that must share a stability index do not.
class AlphaMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested evaluation is not defined for these parameters (e.g. the
/// Cauchy special case has no integral representation here).
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that needs at least one observation received none.
class EmptyInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A query point lies outside the covered range (e.g. path interpolation
/// outside [0, T]).
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Adaptive integration failed to reach the requested tolerance within the
/// subdivision budget.
class QuadratureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rejection sampler exhausted its iteration budget without accepting.
class RejectionBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Too few tail observations to estimate a tail quantity.
class InsufficientTail : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levylab
