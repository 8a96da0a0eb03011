#include "klee/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "klee/constants.hpp"
#include "klee/diagnostics.hpp"
#include "klee/error.hpp"
#include "klee/radon.hpp"

namespace klee {

const CheckResult* VerificationReport::check(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

void addCheck(VerificationReport& r, std::string name, double value, const std::string& relation,
              double threshold) {
  bool ok = false;
  if (relation == "<=") ok = value <= threshold;
  if (relation == ">=") ok = value >= threshold;
  if (relation == ">") ok = value > threshold;
  r.checks.push_back({std::move(name), ok, value, threshold, relation});
}

void runPipeline(VerificationReport& r, const BodyOfRevolution& K, const VerifyConfig& config) {
  const int n = r.n;
  const double eps = r.eps;
  const double kappa = r.kappa;

  SectionOptions sections;
  sections.quadratureNodes = config.quadratureNodes;
  sections.solver.tolerance = config.solverTolerance;
  sections.maximizerWidth = config.maximizerWidth;

  PartnerOptions partnerOptions;
  partnerOptions.degree = config.degree;
  partnerOptions.adaptive = config.adaptive;
  partnerOptions.sections = sections;
  const SymmetricPartner partner = buildSymmetricPartner(K, partnerOptions);
  const BodyOfRevolution& L = partner.body;
  r.degreeUsed = partner.degreeUsed;
  r.inversionTail = partner.inversionTail;
  r.minRadialPowerL = partner.minRadialPower;
  r.warnings.insert(r.warnings.end(), partner.warnings.begin(), partner.warnings.end());

  const ZonalFunction power = ZonalFunction::fromSeries(partner.radialPowerSeries, n);
  const int points = std::max(3, config.checkPoints);
  r.phi.resize(points);
  r.mK.resize(points);
  r.mL.resize(points);
  r.mLMaximized.resize(points);
  r.tStarK.resize(points);
  r.brunnMinkowskiK = -std::numeric_limits<double>::infinity();
  r.brunnMinkowskiL = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < points; ++j) {
    const double phi = kPi * j / (points - 1);
    r.phi[j] = phi;
    const SectionCurve curveK = innerSectionFunction(K, phi, sections);
    r.mK[j] = curveK.m;
    r.tStarK[j] = curveK.tStar;
    r.maxStationarityResidual = std::max(r.maxStationarityResidual, curveK.stationarityResidual);
    r.brunnMinkowskiK = std::max(r.brunnMinkowskiK, concavityDefect(curveK, n));

    r.mL[j] = sphericalRadonAt(power, phi, config.quadratureNodes) / (n - 1);
    const SectionCurve curveL = innerSectionFunction(L, phi, sections);
    r.mLMaximized[j] = curveL.m;
    r.lMaxAbsTStar = std::max(r.lMaxAbsTStar, std::abs(curveL.tStar));
    r.brunnMinkowskiL = std::max(r.brunnMinkowskiL, concavityDefect(curveL, n));

    r.mMismatch = std::max(r.mMismatch, std::abs(r.mK[j] - r.mL[j]));
    r.lRouteAgreement = std::max(r.lRouteAgreement, std::abs(r.mL[j] - r.mLMaximized[j]));
  }
  for (int j = 0; j < points; ++j) {
    r.evennessK = std::max(r.evennessK, std::abs(r.mK[j] - r.mK[points - 1 - j]));
    r.tStarAntisymmetry = std::max(r.tStarAntisymmetry, std::abs(r.tStarK[j] + r.tStarK[points - 1 - j]));
  }

  if (eps > 0.0) {
    r.minPsiIntegral = std::numeric_limits<double>::infinity();
    for (int j = 0; j < points; ++j) {
      const MaximizerDiagnostics d = maximizerDiagnostics(eps, n, r.phi[j], r.tStarK[j], sections);
      r.maxFixedPointResidual = std::max(r.maxFixedPointResidual, d.fixedPointResidual);
      r.maxAbsT = std::max(r.maxAbsT, std::abs(d.T));
      r.minPsiIntegral = std::min(r.minPsiIntegral, d.psiIntegral);
    }
    const PerturbationDiagnostics pert(eps, n, r.phi, sections);
    r.maxIdentityResidual = pert.maxIdentityResidual();
    r.maxRadiusResidual = pert.maxRadiusResidual();
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double mcPhi = kPi * unit(rng);
  const double mcT = (2.0 * unit(rng) - 1.0) * 0.5 * sectionHalfWidth(K);
  const McEstimate mc = sectionAreaMcOracle(K, mcPhi, mcT, config.mcSamples, config.seed);
  const double exact = parallelSectionArea(K, mcPhi, mcT, sections);
  r.mcEstimate = mc.estimate;
  r.mcStandardError = mc.standardError;
  r.mcZScore = mc.standardError > 0.0 ? std::abs(mc.estimate - exact) / mc.standardError
                                      : (mc.estimate == exact ? 0.0 : std::numeric_limits<double>::infinity());

  const SymmetryDefect defectL = centralSymmetryDefect(L);
  r.centralSymmetryDefectL = defectL.defect;
  r.originSymmetryDefectL = originSymmetryDefect(L.profile());
  r.curvatureMinL = minCurvature(L.profile());
  for (std::size_t j = 0; j < r.profilePhi.size(); ++j) r.rhoL[j] = L.profile()(r.profilePhi[j]);

  addCheck(r, "m_identity", r.mMismatch, "<=", r.tolM);
  addCheck(r, "curvature_L", r.curvatureMinL, ">", 0.0);
  addCheck(r, "origin_symmetry_L", r.originSymmetryDefectL, "<=", 1e-9);
  addCheck(r, "radial_power_positive_L", r.minRadialPowerL, ">", 0.0);
  addCheck(r, "route_agreement_L", r.lRouteAgreement, "<=", 1e-7 * kappa);
  addCheck(r, "maximizer_centered_L", r.lMaxAbsTStar, "<=", 1e-6);
  addCheck(r, "stationarity_K", r.maxStationarityResidual, "<=", 1e-8 * kappa);
  addCheck(r, "inner_section_even_K", r.evennessK, "<=", 1e-9 * kappa);
  addCheck(r, "maximizer_antisymmetry_K", r.tStarAntisymmetry, "<=", 1e-8);
  if (eps > 0.0) {
    addCheck(r, "fixed_point_K", r.maxFixedPointResidual, "<=", 1e-8);
    addCheck(r, "perturbation_identity_K", r.maxIdentityResidual, "<=", 1e-8);
  }
  addCheck(r, "brunn_minkowski_K", r.brunnMinkowskiK, "<=", 1e-8);
  addCheck(r, "brunn_minkowski_L", r.brunnMinkowskiL, "<=", 1e-8);
  addCheck(r, "monte_carlo_K", r.mcZScore, "<=", 4.0);
}

}  // namespace

VerificationReport verifyCounterexample(double eps, int n, const VerifyConfig& config) {
  VerificationReport r;
  r.n = n;
  r.eps = eps;
  r.degreeRequested = config.degree;
  r.degreeUsed = config.degree;
  r.quadratureNodes = config.quadratureNodes;
  r.seed = config.seed;
  r.kappa = ballVolume(n - 1);
  r.tolM = config.tolMRelative * r.kappa;

  const BodyOfRevolution K = buildK(eps, n);
  const int samples = std::max(2, config.profileSamples);
  r.profilePhi.resize(samples);
  r.rhoK.resize(samples);
  r.rhoL.assign(samples, 0.0);
  for (int j = 0; j < samples; ++j) {
    r.profilePhi[j] = kPi * j / (samples - 1);
    r.rhoK[j] = K.profile()(r.profilePhi[j]);
  }
  r.curvatureMinK = minCurvature(K.profile());
  addCheck(r, "curvature_K", r.curvatureMinK, ">", 0.0);
  const SymmetryDefect defectK = centralSymmetryDefect(K);
  r.centralSymmetryDefectK = defectK.defect;
  r.gridNoise = defectK.gridNoise;
  r.defectFloor = 10.0 * defectK.gridNoise;
  addCheck(r, "asymmetry_K", r.centralSymmetryDefectK, ">=", r.defectFloor);
  if (r.centralSymmetryDefectK <= r.defectFloor) {
    r.warnings.push_back("central symmetry defect of K is below the floor: K is centrally symmetric to grid accuracy");
  }

  try {
    runPipeline(r, K, config);
  } catch (const NumericalError& e) {
    r.error = e.what();
    addCheck(r, "numerical_pipeline", 1.0, "<=", 0.0);
  }

  r.passed = r.error.empty() && std::all_of(r.checks.begin(), r.checks.end(),
                                            [](const CheckResult& c) { return c.passed; });
  return r;
}

}  // namespace klee
