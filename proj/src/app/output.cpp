#include "klee/app/output.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "klee/app/svg.hpp"
#include "klee/constants.hpp"
#include "klee/radon.hpp"

namespace klee::app {

VerifyConfig verifyConfigFrom(const RunConfig& config) {
  VerifyConfig v;
  v.degree = config.degree;
  v.quadratureNodes = config.quadratureNodes;
  v.checkPoints = config.checkPoints;
  v.tolMRelative = config.tolM;
  v.solverTolerance = config.solverTolerance;
  v.maximizerWidth = config.maximizerWidth;
  v.mcSamples = config.mcSamples;
  v.seed = config.seed;
  v.adaptive = config.adaptive;
  return v;
}

ProfileTable buildProfileTable(double eps, int n, const RunConfig& config) {
  const VerifyConfig vc = verifyConfigFrom(config);
  PartnerOptions options;
  options.degree = vc.degree;
  options.adaptive = vc.adaptive;
  options.sections.quadratureNodes = vc.quadratureNodes;
  options.sections.solver.tolerance = vc.solverTolerance;
  options.sections.maximizerWidth = vc.maximizerWidth;
  options.sections.gridSamples = 0;

  const BodyOfRevolution K = buildK(eps, n);
  const SymmetricPartner partner = buildSymmetricPartner(K, options);
  const ZonalFunction power = ZonalFunction::fromSeries(partner.radialPowerSeries, n);

  ProfileTable t;
  t.n = n;
  t.eps = eps;
  t.degreeUsed = partner.degreeUsed;
  t.warnings = partner.warnings;
  t.phi = partner.phiGrid;
  t.mK = partner.innerSection;
  t.tStar = partner.tStar;
  for (double phi : t.phi) {
    t.rhoK.push_back(K.profile()(phi));
    t.rhoL.push_back(partner.body.profile()(phi));
    t.mL.push_back(sphericalRadonAt(power, phi, vc.quadratureNodes) / (n - 1));
    t.curvatureK.push_back(profileCurvature(K.profile(), phi));
    t.curvatureL.push_back(profileCurvature(partner.body.profile(), phi));
  }
  return t;
}

std::string profileCsv(const ProfileTable& t) {
  std::ostringstream out;
  out << "phi,rho_K,rho_L,m_K,m_L,t_star,curvature_K,curvature_L\n";
  for (std::size_t i = 0; i < t.phi.size(); ++i) {
    out << formatDouble(t.phi[i]) << ',' << formatDouble(t.rhoK[i]) << ',' << formatDouble(t.rhoL[i]) << ','
        << formatDouble(t.mK[i]) << ',' << formatDouble(t.mL[i]) << ',' << formatDouble(t.tStar[i]) << ','
        << formatDouble(t.curvatureK[i]) << ',' << formatDouble(t.curvatureL[i]) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json profileJson(const ProfileTable& t) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["n"] = t.n;
  j["eps"] = t.eps;
  j["degreeUsed"] = t.degreeUsed;
  j["phi"] = t.phi;
  j["rho_K"] = t.rhoK;
  j["rho_L"] = t.rhoL;
  j["m_K"] = t.mK;
  j["m_L"] = t.mL;
  j["t_star"] = t.tStar;
  j["curvature_K"] = t.curvatureK;
  j["curvature_L"] = t.curvatureL;
  j["warnings"] = t.warnings;
  return j;
}

nlohmann::ordered_json reportJson(const VerificationReport& r, const VerifyConfig& c) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = r.schemaVersion;
  j["n"] = r.n;
  j["eps"] = r.eps;
  j["degreeRequested"] = r.degreeRequested;
  j["degreeUsed"] = r.degreeUsed;
  j["quadratureNodes"] = r.quadratureNodes;
  j["seed"] = r.seed;
  j["passed"] = r.passed;
  j["error"] = r.error;
  j["tolerances"] = {{"tolMRelative", c.tolMRelative},
                     {"tolM", r.tolM},
                     {"solverTolerance", c.solverTolerance},
                     {"maximizerWidth", c.maximizerWidth},
                     {"checkPoints", c.checkPoints},
                     {"mcSamples", c.mcSamples},
                     {"defectFloorFactor", 10.0}};
  j["kappa"] = r.kappa;
  j["mMismatch"] = r.mMismatch;
  j["tolM"] = r.tolM;
  j["curvatureMinK"] = r.curvatureMinK;
  j["curvatureMinL"] = r.curvatureMinL;
  j["centralSymmetryDefectK"] = r.centralSymmetryDefectK;
  j["centralSymmetryDefectL"] = r.centralSymmetryDefectL;
  j["defectFloor"] = r.defectFloor;
  j["gridNoise"] = r.gridNoise;
  j["originSymmetryDefectL"] = r.originSymmetryDefectL;
  j["minRadialPowerL"] = r.minRadialPowerL;
  j["inversionTail"] = r.inversionTail;
  j["lRouteAgreement"] = r.lRouteAgreement;
  j["lMaxAbsTStar"] = r.lMaxAbsTStar;
  j["maxStationarityResidual"] = r.maxStationarityResidual;
  j["maxFixedPointResidual"] = r.maxFixedPointResidual;
  j["maxIdentityResidual"] = r.maxIdentityResidual;
  j["maxRadiusResidual"] = r.maxRadiusResidual;
  j["maxAbsT"] = r.maxAbsT;
  j["minPsiIntegral"] = r.minPsiIntegral;
  j["evennessK"] = r.evennessK;
  j["tStarAntisymmetry"] = r.tStarAntisymmetry;
  j["brunnMinkowskiK"] = r.brunnMinkowskiK;
  j["brunnMinkowskiL"] = r.brunnMinkowskiL;
  j["mcZScore"] = r.mcZScore;
  j["mcEstimate"] = r.mcEstimate;
  j["mcStandardError"] = r.mcStandardError;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  std::vector<std::string> failed;
  for (const CheckResult& ch : r.checks) {
    checks.push_back({{"name", ch.name},
                      {"passed", ch.passed},
                      {"value", ch.value},
                      {"relation", ch.relation},
                      {"threshold", ch.threshold}});
    if (!ch.passed) failed.push_back(ch.name);
  }
  j["checks"] = checks;
  j["failedChecks"] = failed;
  j["warnings"] = r.warnings;
  j["phi"] = r.phi;
  j["mK"] = r.mK;
  j["mL"] = r.mL;
  j["mLMaximized"] = r.mLMaximized;
  j["tStarK"] = r.tStarK;
  j["profilePhi"] = r.profilePhi;
  j["rhoK"] = r.rhoK;
  j["rhoL"] = r.rhoL;
  return j;
}

namespace {

std::string params(const VerificationReport& r) {
  std::ostringstream s;
  s << "n = " << r.n << ", eps = " << formatDouble(r.eps);
  return s.str();
}

// Full planar curve from samples on [0, pi], mirrored to x < 0.
void planarCurve(const std::vector<double>& phi, const std::vector<double>& rho, std::vector<double>& x,
                 std::vector<double>& y) {
  x.clear();
  y.clear();
  for (std::size_t i = 0; i < phi.size(); ++i) {
    x.push_back(rho[i] * std::sin(phi[i]));
    y.push_back(rho[i] * std::cos(phi[i]));
  }
  for (std::size_t i = phi.size(); i-- > 0;) {
    x.push_back(-rho[i] * std::sin(phi[i]));
    y.push_back(rho[i] * std::cos(phi[i]));
  }
}

}  // namespace

std::string boundaryFigure(const VerificationReport& r) {
  SvgChart chart;
  chart.title = "Boundary curves in the x1-xn plane (" + params(r) + ")";
  chart.xLabel = "x1";
  chart.yLabel = "xn";
  chart.equalAspect = true;
  chart.width = 560;
  chart.height = 560;
  SvgSeries k{"K (rho_K)", {}, {}, "#d62728", ""};
  SvgSeries l{"L (rho_L)", {}, {}, "#1f77b4", "6,4"};
  planarCurve(r.profilePhi, r.rhoK, k.x, k.y);
  planarCurve(r.profilePhi, r.rhoL, l.x, l.y);
  chart.series = {k, l};
  return chart.render();
}

std::string innerSectionFigure(const VerificationReport& r) {
  SvgChart chart;
  chart.title = "Inner section functions (" + params(r) + ", max gap " + formatDouble(r.mMismatch) + ")";
  chart.xLabel = "phi";
  chart.yLabel = "maximal section volume";
  chart.series = {{"m_K", r.phi, r.mK, "#d62728", ""}, {"m_L", r.phi, r.mL, "#1f77b4", "6,4"}};
  return chart.render();
}

std::string maximizerFigure(const VerificationReport& r) {
  SvgChart chart;
  chart.title = "Maximizing offset t(phi) of K (" + params(r) + ")";
  chart.xLabel = "phi";
  chart.yLabel = "t";
  chart.series = {{"t_star", r.phi, r.tStarK, "#2ca02c", ""}};
  return chart.render();
}

std::string cellTag(int n, double eps) {
  char buffer[64];
  const auto res = std::to_chars(buffer, buffer + sizeof buffer, eps);
  return "n" + std::to_string(n) + "_eps" + std::string(buffer, res.ptr);
}

void writeTextFile(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace klee::app
