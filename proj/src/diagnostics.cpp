#include "klee/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "klee/constants.hpp"
#include "klee/error.hpp"
#include "klee/quadrature.hpp"

namespace klee {

MaximizerDiagnostics maximizerDiagnostics(double eps, int n, double phi, double tStar,
                                          const SectionOptions& options) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("maximizerDiagnostics: eps must lie in (0, 1)");
  if (n < 3) throw std::invalid_argument("maximizerDiagnostics: n must be >= 3");
  const auto rule = cachedJacobiRule(options.quadratureNodes, 0.5 * (n - 4));
  const double c = std::cos(phi), sn = std::sin(phi);
  double phiInt = 0.0, psiInt = 0.0;
  for (std::size_t i = 0; i < rule->size(); ++i) {
    const double s = rule->nodes[i];
    const double rho = solveKleeSectionRadius({tStar, phi, s, eps}, options.solver);
    const double q = std::hypot(tStar, rho);
    const double z = tStar * c + rho * s * sn;
    const double denom = q * rho + eps * z * z * s * sn;
    const double lead = std::pow(rho, n - 2);
    phiInt += rule->weights[i] * lead * z * z * c / denom;
    psiInt += rule->weights[i] * lead * q / denom;
  }
  if (!(psiInt > 0.0)) throw NumericalError("maximizerDiagnostics: Psi integral is not positive");
  MaximizerDiagnostics d;
  d.T = tStar / eps;
  d.phiIntegral = phiInt;
  d.psiIntegral = psiInt;
  d.fixedPointResidual = std::abs(tStar + eps * phiInt / psiInt);
  return d;
}

double perturbationU(double eps, double T, double phi, double s, double rho) {
  const double z = T * eps * std::cos(phi) + rho * s * std::sin(phi);
  const double q2 = T * T * eps * eps + rho * rho;
  const double q3 = q2 * std::sqrt(q2);
  return z * z * z * (1.0 + q3) / ((1.0 + rho) * (1.0 + q2 + q2 * q2)) + T * T * eps / (1.0 + rho);
}

double perturbationF(double eps, int n, double U) {
  double sum = 0.0;
  double binom = 1.0;
  double term = 1.0 / eps;  // U^j eps^{j-1} built incrementally
  for (int j = 1; j <= n - 1; ++j) {
    binom = binom * (n - j) / j;
    term *= U * eps;
    sum += (j % 2 == 0 ? 1.0 : -1.0) * binom * term;
  }
  return sum;
}

PerturbationDiagnostics::PerturbationDiagnostics(double eps, int n, std::vector<double> phiGrid,
                                                 const SectionOptions& options)
    : eps_(eps), n_(n), options_(options) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("PerturbationDiagnostics: eps must lie in (0, 1)");
  if (n < 3) throw std::invalid_argument("PerturbationDiagnostics: n must be >= 3");
  const BodyOfRevolution body = BodyOfRevolution(n, kleeProfile(eps)).withKleeEpsilon(eps);
  const auto rule = cachedJacobiRule(options.quadratureNodes, 0.5 * (n - 4));
  const double kappa = ballVolume(n - 1);
  const double omega = sphereArea(n - 2);

  SectionOptions curveOptions = options;
  curveOptions.gridSamples = 0;
  for (double phi : phiGrid) {
    const SectionCurve curve = innerSectionFunction(body, phi, curveOptions);
    PerturbationPoint p;
    p.phi = phi;
    p.tStar = curve.tStar;
    p.T = curve.tStar / eps;
    p.m = curve.m;
    double fInt = 0.0;
    for (std::size_t i = 0; i < rule->size(); ++i) {
      const double s = rule->nodes[i];
      const double rho = solveKleeSectionRadius({p.tStar, phi, s, eps}, options.solver);
      const double u = perturbationU(eps, p.T, phi, s, rho);
      const double f = perturbationF(eps, n, u);
      p.radiusResidual = std::max(p.radiusResidual, std::abs(rho - (1.0 - u * eps)));
      p.binomialResidual =
          std::max(p.binomialResidual, std::abs(std::pow(1.0 - u * eps, n - 1) - 1.0 - f * eps));
      fInt += rule->weights[i] * f;
    }
    p.g = omega * fInt;
    p.identityResidual = std::abs(p.m - kappa - eps * p.g / (n - 1));
    points_.push_back(p);
  }
}

double PerturbationDiagnostics::U(std::size_t i, double s) const {
  const PerturbationPoint& p = points_.at(i);
  const double rho = solveKleeSectionRadius({p.tStar, p.phi, s, eps_}, options_.solver);
  return perturbationU(eps_, p.T, p.phi, s, rho);
}

double PerturbationDiagnostics::f(std::size_t i, double s) const {
  return perturbationF(eps_, n_, U(i, s));
}

double PerturbationDiagnostics::maxIdentityResidual() const {
  double worst = 0.0;
  for (const auto& p : points_) worst = std::max(worst, p.identityResidual);
  return worst;
}

double PerturbationDiagnostics::maxRadiusResidual() const {
  double worst = 0.0;
  for (const auto& p : points_) worst = std::max(worst, p.radiusResidual);
  return worst;
}

double PerturbationDiagnostics::maxAbsG() const {
  double worst = 0.0;
  for (const auto& p : points_) worst = std::max(worst, std::abs(p.g));
  return worst;
}

}  // namespace klee
