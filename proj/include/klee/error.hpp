#pragma once

#include <stdexcept>
#include <string>

namespace klee {

// Thrown when a numerical procedure cannot produce a trustworthy answer
// (no bracket, no convergence, unresolved series). Precondition violations
// use std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoBracketError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ResolutionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace klee
