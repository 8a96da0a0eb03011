#pragma once

#include <functional>
#include <vector>

namespace klee {

/// Chebyshev interpolant of f on [a, b] at Chebyshev-Lobatto points.
class ChebyshevInterpolant {
 public:
  ChebyshevInterpolant(const std::function<double(double)>& f, double a, double b, int points = 129);

  double operator()(double x) const;
  const std::vector<double>& coefficients() const { return coeffs_; }

  /// Number of coefficients kept after dropping the tail below
  /// relTol * max |c_k|. Throws ResolutionError when the last
  /// coefficients have not decayed below `resolvedTol` relative.
  int chop(double relTol = 1e-14, double resolvedTol = 1e-11);

  /// Taylor coefficients a_k of the interpolant about the interval midpoint,
  /// so f(mid + h) = sum a_k h^k. Uses the chopped length.
  std::vector<double> taylorCoefficients() const;

  /// k-th derivative at the midpoint.
  double derivativeAtMidpoint(int k) const;

 private:
  double a_;
  double b_;
  std::vector<double> coeffs_;
  int length_;
};

}  // namespace klee
