#pragma once

#include <functional>
#include <string>
#include <vector>

#include "klee/gegenbauer.hpp"
#include "klee/profile.hpp"
#include "klee/sections.hpp"

namespace klee {

/// K_eps as a body in R^n. eps = 0 gives the unit ball.
BodyOfRevolution buildK(double eps, int n);

/// The origin-symmetric body whose central sections match the inner
/// section function of `source`, plus the sampled data it was built from.
struct SymmetricPartner {
  BodyOfRevolution body;
  GegenbauerSeries innerSectionSeries;  // m_source fitted on the grid
  GegenbauerSeries radialPowerSeries;   // (n-1) R^{-1} m_source = rho_L^{n-1}
  std::vector<double> phiGrid;          // Gauss-Gegenbauer angles
  std::vector<double> innerSection;     // m_source on the grid
  std::vector<double> tStar;            // maximizers on the grid
  int requestedDegree = 0;
  int degreeUsed = 0;
  double minRadialPower = 0.0;          // min of (n-1) R^{-1} m on a dense grid
  double inversionTail = 0.0;
  std::vector<std::string> warnings;
};

struct PartnerOptions {
  int degree = 64;
  bool adaptive = true;
  SectionOptions sections{};
};

/// rho_L = ((n-1) R^{-1} m_K)^{1/(n-1)}. Throws NumericalError when the
/// radial power is not positive (eps too large).
SymmetricPartner buildSymmetricPartner(const BodyOfRevolution& source,
                                       const PartnerOptions& options = {});

inline SymmetricPartner buildL(double eps, int n, int degree = 64) {
  PartnerOptions options;
  options.degree = degree;
  return buildSymmetricPartner(buildK(eps, n), options);
}

/// Curvature (2 r'^2 - r r'' + r^2) / (r'^2 + r^2)^{3/2} of the planar
/// profile curve.
double profileCurvature(const RadialProfile& profile, double phi);

std::function<double(double)> curvatureProfile(const RadialProfile& profile);

/// Minimum curvature over a uniform grid of [0, pi].
double minCurvature(const RadialProfile& profile, int gridPoints = 2001);

/// Closed-form curvature of the planar section J_eps of K_eps.
double kleeCurvatureClosedForm(double eps, double phi);

/// Smallest eps at which the curvature numerator
/// 1 + eps cos^3 phi + 2 eps sin^2 phi cos phi first vanishes.
double criticalEpsilonK();

struct SymmetryDefect {
  double defect = 0.0;      // Hausdorff distance curve vs reflected curve
  double center = 0.0;      // reflection centre on the axis
  double gridNoise = 0.0;   // change of the defect under grid refinement + chord error
  int gridPoints = 0;
};

/// Hausdorff distance between the planar profile curve and its point
/// reflection through the midpoint of the two axial boundary points.
SymmetryDefect centralSymmetryDefect(const BodyOfRevolution& body, int gridPoints = 2048);

/// sup |rho(phi) - rho(pi - phi)| on a uniform grid.
double originSymmetryDefect(const RadialProfile& profile, int gridPoints = 2001);

}  // namespace klee
