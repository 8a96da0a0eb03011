#pragma once

#include <cstdint>
#include <vector>

#include "klee/profile.hpp"

namespace klee {

/// Hyperplane {x : <x,u> = t} with u at angle phi from e_n, and an in-plane
/// direction v with <v, w> = s, where e_n = u cos(phi) + w sin(phi).
struct SectionGeometry {
  double t = 0.0;
  double phi = 0.0;
  double s = 0.0;
  double eps = 0.0;
};

/// rho(phi) = (1 + eps cos^3 phi)^(-1/3) with analytic derivatives. eps in (0, 1).
RadialProfile kleeProfile(double eps);

/// (t^2 + rho^2)^{3/2} + eps (t cos phi + rho s sin phi)^3 - 1.
double kleeResidual(const SectionGeometry& g, double rho);

struct SolverOptions {
  double tolerance = 1e-13;   // on the residual of the defining equation
  bool checkUniqueness = true;
  int uniquenessSamples = 8;
};

/// Section radius of K_eps: the unique rho > 0 solving the cubic boundary
/// equation along v. eps = 0 returns sqrt(1 - t^2). Directions with
/// phi < 0 are mapped through rho(t, -phi, -s) = rho(t, phi, s).
double solveKleeSectionRadius(const SectionGeometry& g, const SolverOptions& options = {});

struct SectionPoint {
  double r;
  double drdt;  // partial derivative in t at fixed (phi, s)
};

SectionPoint kleeSectionPoint(const SectionGeometry& g, const SolverOptions& options = {});

/// |x| / rho(x/|x|) - 1 at x = t u + r v.
double gaugeResidual(const BodyOfRevolution& body, double t, double phi, double s, double r);

/// Section radius for an arbitrary body of revolution (ignores the K_eps tag).
SectionPoint generalSectionPoint(const BodyOfRevolution& body, double t, double phi, double s,
                                 const SolverOptions& options = {});
double sectionRadiusGeneral(const BodyOfRevolution& body, double t, double phi, double s,
                            const SolverOptions& options = {});

/// Dispatches to the cubic solver for K_eps bodies, the general one otherwise.
SectionPoint sectionPoint(const BodyOfRevolution& body, double t, double phi, double s,
                          const SolverOptions& options = {});

struct SectionOptions {
  int quadratureNodes = 128;
  SolverOptions solver{};
  double maximizerWidth = 1e-10;
  int gridSamples = 21;  // samples of A(t) kept in the SectionCurve (0 disables)
};

/// Support half-width used for t: min(1/4, min rho - 1e-6) for the Klee
/// family, 0.9 min rho for every other body.
double sectionHalfWidth(const BodyOfRevolution& body);

/// A(t) = omega_{n-2}/(n-1) * int r^{n-1} (1-s^2)^{(n-4)/2} ds.
double parallelSectionArea(const BodyOfRevolution& body, double phi, double t,
                           const SectionOptions& options = {});

/// A'(t) = omega_{n-2} * int r^{n-2} dr/dt (1-s^2)^{(n-4)/2} ds.
double parallelSectionAreaDerivative(const BodyOfRevolution& body, double phi, double t,
                                     const SectionOptions& options = {});

struct SectionCurve {
  double phi = 0.0;
  std::vector<double> tGrid;
  std::vector<double> areas;
  double tStar = 0.0;
  double m = 0.0;
  double stationarityResidual = 0.0;  // |A'(tStar)|
  bool flatMaximum = false;
};

/// Inner section function at phi: maximizes A(t) by golden section, then
/// refines tStar as the root of A'(t).
SectionCurve innerSectionFunction(const BodyOfRevolution& body, double phi,
                                  const SectionOptions& options = {});

/// Largest second difference of A(t)^{1/(n-1)} over the sampled grid
/// (non-positive for convex bodies up to rounding).
double concavityDefect(const SectionCurve& curve, int n);

struct McEstimate {
  double estimate = 0.0;
  double standardError = 0.0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
};

/// Monte Carlo estimate of A(t): uniform points in an (n-1)-ball of the
/// hyperplane, radial membership test. Deterministic for fixed seed.
McEstimate sectionAreaMcOracle(const BodyOfRevolution& body, double phi, double t,
                               std::size_t samples, std::uint64_t seed);

}  // namespace klee
