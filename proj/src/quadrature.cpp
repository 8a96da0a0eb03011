#include "klee/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "klee/error.hpp"

namespace klee {
namespace {

// Monic three-term coefficient beta_k of the symmetric Jacobi weight (1-s^2)^alpha.
double jacobiBeta(int k, double alpha) {
  if (k == 1) return 1.0 / (3.0 + 2.0 * alpha);
  const double twoK = 2.0 * k + 2.0 * alpha;
  return k * (k + 2.0 * alpha) / (twoK * twoK - 1.0);
}

}  // namespace

double jacobiMass(double alpha) {
  return std::sqrt(std::numbers::pi) * std::exp(std::lgamma(alpha + 1.0) - std::lgamma(alpha + 1.5));
}

QuadratureRule gaussJacobiRule(int m, double alpha) {
  if (m < 1) throw std::invalid_argument("gaussJacobiRule: need at least one node");
  if (!(alpha > -1.0)) {
    throw std::invalid_argument("gaussJacobiRule: exponent must exceed -1, got " + std::to_string(alpha));
  }

  std::vector<double> sqrtBeta(m + 1, 0.0);
  for (int k = 1; k <= m; ++k) sqrtBeta[k] = std::sqrt(jacobiBeta(k, alpha));
  const double mass = jacobiMass(alpha);

  QuadratureRule rule;
  rule.jacobiExponent = alpha;
  rule.nodes.resize(m);
  rule.weights.resize(m);

  if (m == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = mass;
    return rule;
  }

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd sub(m - 1);
  for (int k = 0; k < m - 1; ++k) sub[k] = sqrtBeta[k + 1];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("gaussJacobiRule: eigen solver failed");
  const Eigen::VectorXd& eig = solver.eigenvalues();

  // Orthonormal recurrence: x p_k = sb_{k+1} p_{k+1} + sb_k p_{k-1}.
  auto evaluate = [&](double x, double& pm, double& dpm, double& christoffel) {
    double pPrev = 0.0, p = 1.0 / std::sqrt(mass);
    double dPrev = 0.0, d = 0.0;
    christoffel = p * p;
    for (int k = 0; k < m; ++k) {
      const double pNext = (x * p - sqrtBeta[k] * pPrev) / sqrtBeta[k + 1];
      const double dNext = (p + x * d - sqrtBeta[k] * dPrev) / sqrtBeta[k + 1];
      pPrev = p;
      p = pNext;
      dPrev = d;
      d = dNext;
      if (k + 1 < m) christoffel += p * p;
    }
    pm = p;
    dpm = d;
  };

  for (int i = 0; i < m; ++i) {
    double x = eig[i];
    double pm = 0, dpm = 0, chr = 0;
    for (int it = 0; it < 3; ++it) {
      evaluate(x, pm, dpm, chr);
      if (dpm == 0.0) break;
      const double step = pm / dpm;
      x -= step;
      if (std::abs(step) < 1e-17) break;
    }
    evaluate(x, pm, dpm, chr);
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / chr;
  }

  // Exact symmetry about 0.
  for (int i = 0; i < m / 2; ++i) {
    const int j = m - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
  return rule;
}

std::shared_ptr<const QuadratureRule> cachedJacobiRule(int m, double alpha) {
  static std::mutex mutex;
  static std::map<std::pair<int, double>, std::shared_ptr<const QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{m, alpha}];
  if (!slot) slot = std::make_shared<const QuadratureRule>(gaussJacobiRule(m, alpha));
  return slot;
}

QuadratureRule gaussLegendreRule(int m, double a, double b) {
  QuadratureRule rule = *cachedJacobiRule(m, 0.0);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

}  // namespace klee
