#pragma once

#include <vector>

#include "klee/sections.hpp"

namespace klee {

struct MaximizerDiagnostics {
  double T = 0.0;  // tStar / eps
  double phiIntegral = 0.0;
  double psiIntegral = 0.0;
  double fixedPointResidual = 0.0;  // |tStar + eps * int Phi / int Psi|
};

/// Phi and Psi integrals of the stationarity condition for K_eps evaluated at tStar.
/// Throws NumericalError when int Psi <= 0.
MaximizerDiagnostics maximizerDiagnostics(double eps, int n, double phi, double tStar,
                                          const SectionOptions& options = {});

/// U_eps(phi, s) at the maximizer, from T = tStar/eps and the section radius rho there.
double perturbationU(double eps, double T, double phi, double s, double rho);

/// f_eps = sum_{j=1}^{n-1} (-1)^j C(n-1, j) U^j eps^{j-1}.
double perturbationF(double eps, int n, double U);

struct PerturbationPoint {
  double phi = 0.0;
  double tStar = 0.0;
  double T = 0.0;
  double m = 0.0;               // from the maximizer
  double g = 0.0;               // omega_{n-2} int f dmu
  double identityResidual = 0.0;  // |m - kappa_{n-1} - eps g/(n-1)|
  double radiusResidual = 0.0;    // max_s |rho - (1 - U eps)|
  double binomialResidual = 0.0;  // max_s |(1 - U eps)^{n-1} - 1 - f eps|
};

class PerturbationDiagnostics {
 public:
  PerturbationDiagnostics(double eps, int n, std::vector<double> phiGrid,
                          const SectionOptions& options = {});

  const std::vector<PerturbationPoint>& points() const { return points_; }
  double eps() const { return eps_; }
  int dimension() const { return n_; }

  /// U_eps and f_eps at grid point i and in-plane coordinate s.
  double U(std::size_t i, double s) const;
  double f(std::size_t i, double s) const;

  double maxIdentityResidual() const;
  double maxRadiusResidual() const;
  double maxAbsG() const;

 private:
  double eps_;
  int n_;
  SectionOptions options_;
  std::vector<PerturbationPoint> points_;
};

}  // namespace klee
