#pragma once

#include <functional>
#include <utility>

namespace klee {

struct RootResult {
  double x;
  double residual;
  int iterations;
};

/// Newton's method kept inside a sign-change bracket [lo, hi]; falls back to
/// bisection whenever the Newton step leaves the bracket or stalls.
/// `f` returns (value, derivative). Stops when |value| <= ftol or the
/// bracket collapses to rounding. Throws NoBracketError when f(lo) and f(hi)
/// have the same sign, ConvergenceError after maxIter steps.
RootResult safeguardedNewton(const std::function<std::pair<double, double>(double)>& f, double lo,
                             double hi, double ftol, int maxIter = 200);

/// Derivative-free bracketed root (Illinois variant of regula falsi).
/// Stops when the bracket is narrower than xtol or |f| <= ftol.
RootResult illinoisRoot(const std::function<double(double)>& f, double lo, double hi, double xtol,
                        double ftol = 0.0, int maxIter = 200);

struct MaximumResult {
  double x;
  double value;
  double lo;  // final bracket
  double hi;
  int evaluations;
};

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
MaximumResult goldenSectionMaximize(const std::function<double(double)>& f, double lo, double hi,
                                    double width, int maxIter = 300);

}  // namespace klee
