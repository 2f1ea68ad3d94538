// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

/// Caller supplied inconsistent or out-of-contract input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine could not deliver a result at the required accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Merged Gaussian (bra * ket) is not positive definite; the pair is unusable.
class IllConditionedPair : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A basis term was rejected (not normalizable, Pauli-vanishing, ...).
class RejectedTerm : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Iterative solver did not converge within its iteration budget.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace wigner
