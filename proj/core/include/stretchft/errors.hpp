#pragma once

#include <stdexcept>
#include <string>

#include "stretchft/eval_result.hpp"

namespace stretchft {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument sits on a pole (e.g. Gamma at a non-positive integer).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class UnderflowError : public std::underflow_error {
 public:
  using std::underflow_error::underflow_error;
};

/// An iterative engine gave up. The best value reached so far, with its error
/// estimate, travels with the exception.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, EvalResult partial)
      : std::runtime_error(what), partial_(partial) {}

  const EvalResult& partial() const noexcept { return partial_; }

 private:
  EvalResult partial_;
};

/// Semi-infinite integrand still carries mass at the far end of the transform.
class NonDecayError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

/// A truncated series was asked for a value outside the range where it
/// converges to working accuracy.
class SeriesUnconvergedError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

}  // namespace stretchft
