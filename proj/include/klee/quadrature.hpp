#pragma once

#include <memory>
#include <vector>

namespace klee {

/// Gauss rule for the weight (1 - s^2)^alpha on (-1, 1).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double jacobiExponent = 0.0;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// m-point symmetric Gauss-Jacobi rule, exact for s^j (1-s^2)^alpha, j <= 2m-1.
/// Nodes from the Golub-Welsch eigenproblem, polished by Newton on the
/// orthonormal recurrence; weights from the Christoffel function.
QuadratureRule gaussJacobiRule(int m, double alpha);

/// Shared, immutable rule; repeated requests for the same (m, alpha) reuse it.
std::shared_ptr<const QuadratureRule> cachedJacobiRule(int m, double alpha);

/// Gauss-Legendre rule mapped to [a, b].
QuadratureRule gaussLegendreRule(int m, double a, double b);

/// Exact value of the integral of (1-s^2)^alpha over (-1, 1).
double jacobiMass(double alpha);

}  // namespace klee
