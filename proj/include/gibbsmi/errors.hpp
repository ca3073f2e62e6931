#pragma once

#include <stdexcept>
#include <string>

namespace gibbsmi {

/// Bad caller input: negative beta, mismatched dimensions, malformed specs.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures detected while validating numerical results.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix function produced NaN/Inf on some eigenvalue.
class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A matrix offered as a density matrix is not one (trace, sign, symmetry).
class InvalidStateError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The eigensolver failed or its residual exceeded the contract.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace gibbsmi
