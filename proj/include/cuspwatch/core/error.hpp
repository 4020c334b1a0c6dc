#pragma once

#include <stdexcept>
#include <string>

namespace cuspwatch {

/// Violated operation precondition (bad degree, wrong dimension, singular
/// input, ...). The command line front end maps these to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DependentInputError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Raised when a wedge vector has no unique leading tuple, which certifies
/// that it is not a pure wedge.
class NotDecomposableError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class GaugeTooSteepError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DimensionMismatchError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Internal inconsistency (a postcondition check failed). Never expected.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class E = PreconditionError>
inline void require(bool condition, const std::string& message) {
  if (!condition) throw E(message);
}

}  // namespace cuspwatch
