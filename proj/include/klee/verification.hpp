#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klee/construction.hpp"

namespace klee {

inline constexpr int kReportSchemaVersion = 1;

struct VerifyConfig {
  int degree = 64;
  int quadratureNodes = 128;
  int checkPoints = 49;         // uniform phi grid on [0, pi] for the comparison
  double tolMRelative = 1e-6;   // mMismatch <= tolMRelative * kappa_{n-1}
  double solverTolerance = 1e-13;
  double maximizerWidth = 1e-10;
  std::size_t mcSamples = 100000;
  std::uint64_t seed = 20100809;
  bool adaptive = true;
  int profileSamples = 361;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
  std::string relation;  // "<=", ">=", ">"
};

struct VerificationReport {
  int schemaVersion = kReportSchemaVersion;
  int n = 3;
  double eps = 0.0;
  int degreeRequested = 0;
  int degreeUsed = 0;
  int quadratureNodes = 0;
  std::uint64_t seed = 0;

  double kappa = 0.0;  // kappa_{n-1}
  double mMismatch = 0.0;
  double tolM = 0.0;
  double curvatureMinK = 0.0;
  double curvatureMinL = 0.0;
  double centralSymmetryDefectK = 0.0;
  double centralSymmetryDefectL = 0.0;
  double defectFloor = 0.0;
  double gridNoise = 0.0;
  double originSymmetryDefectL = 0.0;
  double minRadialPowerL = 0.0;
  double inversionTail = 0.0;

  // L computed by full maximization against the symmetric shortcut
  double lRouteAgreement = 0.0;
  double lMaxAbsTStar = 0.0;

  // K maximizer and perturbation diagnostics
  double maxStationarityResidual = 0.0;
  double maxFixedPointResidual = 0.0;
  double maxIdentityResidual = 0.0;
  double maxRadiusResidual = 0.0;
  double maxAbsT = 0.0;
  double minPsiIntegral = 0.0;
  double evennessK = 0.0;
  double tStarAntisymmetry = 0.0;
  double brunnMinkowskiK = 0.0;
  double brunnMinkowskiL = 0.0;
  double mcZScore = 0.0;
  double mcEstimate = 0.0;
  double mcStandardError = 0.0;

  std::vector<double> phi;
  std::vector<double> mK;
  std::vector<double> mL;
  std::vector<double> mLMaximized;
  std::vector<double> tStarK;

  // boundary profiles sampled on a uniform grid of [0, pi]
  std::vector<double> profilePhi;
  std::vector<double> rhoK;
  std::vector<double> rhoL;

  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  std::string error;  // set on numerical breakdown
  bool passed = false;

  const CheckResult* check(const std::string& name) const;
};

/// Builds K and L, computes every certification and records failures in
/// the report. Only unexpected exceptions escape; numerical breakdowns
/// are caught and recorded in `error`.
VerificationReport verifyCounterexample(double eps, int n, const VerifyConfig& config = {});

}  // namespace klee
