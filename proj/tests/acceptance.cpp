// Acceptance suite: one line per criterion, exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "klee/constants.hpp"
#include "klee/construction.hpp"
#include "klee/fourier.hpp"
#include "klee/radon.hpp"
#include "klee/verification.hpp"

using namespace klee;
using std::numbers::pi;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

const std::vector<int> kDims{3, 4, 5};
const std::vector<double> kEps{0.02, 0.05, 0.1};

struct Matrix {
  std::map<std::pair<int, double>, VerificationReport> reports;
  double seconds = 0.0;
};

Matrix runMatrix() {
  Matrix m;
  VerifyConfig config;
  config.degree = 64;
  const auto start = std::chrono::steady_clock::now();
  for (int n : kDims) {
    for (double eps : kEps) m.reports.emplace(std::pair{n, eps}, verifyCounterexample(eps, n, config));
  }
  m.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return m;
}

void report(int id, const std::string& title, const Outcome& o) {
  std::printf("%s criterion %d: %s |%s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), o.detail.str().c_str());
  std::fflush(stdout);
}

Outcome criterion1(const Matrix& m) {
  Outcome o;
  double worstRatio = 0.0;
  for (const auto& [cell, r] : m.reports) {
    const double ratio = r.mMismatch / ballVolume(cell.first - 1);
    worstRatio = std::max(worstRatio, ratio);
    o.require(r.error.empty(), "numerical error in n=" + std::to_string(cell.first));
    o.require(ratio <= 1e-6, "mismatch n=" + std::to_string(cell.first));
  }
  o.require(m.seconds < 300.0, "runtime");
  o.detail << " max mMismatch/kappa = " << worstRatio << ", matrix runtime " << m.seconds << " s";
  return o;
}

Outcome criterion2(const Matrix& m) {
  Outcome o;
  double minRatio = 1e300, maxOrigin = 0.0;
  for (const auto& [cell, r] : m.reports) {
    o.require(r.passed, "cell did not pass");
    minRatio = std::min(minRatio, r.centralSymmetryDefectK / r.gridNoise);
    maxOrigin = std::max(maxOrigin, r.originSymmetryDefectL);
    o.require(r.centralSymmetryDefectK >= 10.0 * r.gridNoise, "asymmetry of K");
    o.require(r.originSymmetryDefectL <= 1e-9, "origin symmetry of L");
  }
  o.detail << " min defectK/gridNoise = " << minRatio << ", max originSymmetryDefectL = " << maxOrigin;
  return o;
}

Outcome criterion3(const Matrix& m) {
  Outcome o;
  double poleError = 0.0, minK = 1e300, minL = 1e300;
  for (double eps : kEps) {
    const RadialProfile k = kleeProfile(eps);
    poleError = std::max(poleError, std::abs(profileCurvature(k, 0.0) - std::pow(1 + eps, -2.0 / 3.0)));
    poleError = std::max(poleError, std::abs(profileCurvature(k, pi) - std::pow(1 - eps, -2.0 / 3.0)));
  }
  for (const auto& [cell, r] : m.reports) {
    minK = std::min(minK, r.curvatureMinK);
    minL = std::min(minL, r.curvatureMinL);
  }
  o.require(poleError <= 1e-10, "pole curvature");
  o.require(minK > 0.0 && minL > 0.0, "curvature positivity");
  o.detail << " pole error " << poleError << ", min curvature K " << minK << ", L " << minL;
  return o;
}

Outcome criterion4() {
  Outcome o;
  const double eps = criticalEpsilonK();
  o.require(std::abs(eps - 0.9186) <= 1e-3, "value");
  o.require(eps >= 0.91, "consistency with 0.91");
  o.detail << " critical eps = " << eps;
  return o;
}

Outcome criterion5() {
  Outcome o;
  double lambda0Error = 0.0;
  for (int n : kDims) {
    lambda0Error = std::max(lambda0Error, std::abs(radonMultipliers(n, 2)[0] - sphereArea(n - 1)));
  }
  const double lambda2Error = std::abs(radonMultipliers(3, 2)[1] + pi);
  o.require(lambda0Error <= 1e-10, "lambda_0");
  o.require(lambda2Error <= 1e-8, "lambda_2");

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  double worst = 0.0;
  for (int n : kDims) {
    const double lambda = 0.5 * (n - 2);
    const auto basis = cachedGegenbauerBasis(lambda);
    GegenbauerSeries poly;
    poly.lambda = lambda;
    poly.basis = basis;
    for (int k = 0; k <= 60; k += 2) poly.coeffs.push_back(coeff(rng) / (1.0 + k / 10.0));
    const ZonalFunction f = ZonalFunction::fromSeries(poly, n);
    RadonOptions opts;
    opts.degree = 60;

    // R after R^{-1}
    const TransformedZonal inv = radonInverseSpectral(f, opts);
    const ZonalFunction invF = ZonalFunction::fromSeries(inv.series, n);
    // R^{-1} after R
    std::vector<double> grid = gegenbauerGrid(lambda, 60), samples;
    for (double phi : grid) samples.push_back(sphericalRadonAt(f, phi));
    const GegenbauerSeries forward = fitGegenbauerSamples(samples, lambda, 60);
    const GegenbauerSeries back = radonInverseSeries(forward, n);
    for (int j = 0; j <= 180; ++j) {
      const double phi = pi * j / 180;
      worst = std::max(worst, std::abs(sphericalRadonAt(invF, phi) - f(phi)));
      worst = std::max(worst, std::abs(evalSeries(back, phi) - f(phi)));
    }
  }
  o.require(worst <= 1e-9, "round trips");
  o.detail << " |lambda_0 - omega| = " << lambda0Error << ", |lambda_2 + pi| = " << lambda2Error
           << ", round-trip sup error = " << worst;
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worstRoute = 0.0;
  for (int n : kDims) {
    const SymmetricPartner partner = buildL(0.1, n, 64);
    GegenbauerSeries scaled = partner.innerSectionSeries;
    for (double& c : scaled.coeffs) c *= (n - 1);
    const ZonalFunction g = ZonalFunction::fromSeries(scaled, n);
    const TransformedZonal fourier = radonInverseFourier(g, 32);
    for (std::size_t i = 0; i < fourier.phiGrid.size(); ++i) {
      worstRoute = std::max(worstRoute,
                            std::abs(fourier.values[i] - evalSeries(partner.radialPowerSeries, fourier.phiGrid[i])));
    }
    for (int j = 0; j <= 36; ++j) {
      const double phi = pi * j / 36;
      worstRoute = std::max(worstRoute, std::abs(fourier(phi) - evalSeries(partner.radialPowerSeries, phi)));
    }
  }
  o.require(worstRoute <= 1e-4, "route agreement");

  double worstRF = 0.0;
  const std::vector<std::function<double(double)>> tests{
      [](double phi) { return std::exp(0.5 * std::pow(std::cos(phi), 2)); },
      [](double phi) { return 1.0 / (2.0 + std::cos(2 * phi)); }};
  for (int n : kDims) {
    for (const auto& fn : tests) {
      const ZonalFunction f(fn, Parity::Even, n);
      for (int j = 0; j <= 12; ++j) {
        const double phi = pi * j / 12;
        worstRF = std::max(worstRF, std::abs(fourierHomogeneous(HomogeneousExtension(f, 1), phi).real() -
                                             pi * sphericalRadonAt(f, phi)));
      }
    }
  }
  o.require(worstRF <= 1e-6, "pi R f = f^ identity");
  o.detail << " Fourier vs spectral sup = " << worstRoute << ", |pi Rf - f^| sup = " << worstRF;
  return o;
}

Outcome criterion7() {
  Outcome o;
  const double eps = 0.1;
  double worstSym = 0.0, worstEll = 0.0;
  for (int n : kDims) {
    const BodyOfRevolution sym(n, RadialProfile::closedForm([eps](double x) {
                                 const double h = 1.0 + eps * x * x;
                                 return ProfileValue{std::pow(h, -2.0), -4.0 * eps * x * std::pow(h, -3.0),
                                                     -4.0 * eps * std::pow(h, -3.0) +
                                                         24.0 * eps * eps * x * x * std::pow(h, -4.0)};
                               }));
    const SymmetricPartner ps = buildSymmetricPartner(sym);
    const BodyOfRevolution ell(n, RadialProfile::closedForm([eps](double x) {
                                 const double h = 1.0 + eps * x;
                                 return ProfileValue{1.0 / h, -eps / (h * h), 2.0 * eps * eps / (h * h * h)};
                               }));
    const SymmetricPartner pe = buildSymmetricPartner(ell);
    const double a = 1.0 / std::sqrt(1.0 - eps * eps), b = 1.0 / (1.0 - eps * eps);
    for (int j = 0; j <= 180; ++j) {
      const double phi = pi * j / 180;
      worstSym = std::max(worstSym, std::abs(ps.body.profile()(phi) - sym.profile()(phi)));
      const double s = std::sin(phi), c = std::cos(phi);
      const double centered = 1.0 / std::sqrt(s * s / (a * a) + c * c / (b * b));
      worstEll = std::max(worstEll, std::abs(pe.body.profile()(phi) - centered));
    }
  }
  o.require(worstSym <= 1e-8, "symmetric fixture");
  o.require(worstEll <= 1e-6, "ellipsoid fixture");
  o.detail << " symmetric round trip " << worstSym << ", ellipsoid " << worstEll;
  return o;
}

Outcome criterion8(const Matrix& m) {
  Outcome o;
  double stat = 0.0, fixed = 0.0, identity = 0.0, spread = 0.0;
  for (const auto& [cell, r] : m.reports) {
    stat = std::max(stat, r.maxStationarityResidual / r.kappa);
    fixed = std::max(fixed, r.maxFixedPointResidual);
    identity = std::max(identity, r.maxIdentityResidual);
  }
  for (int n : kDims) {
    const double lo = m.reports.at({n, 0.02}).maxAbsT;
    const double hi = m.reports.at({n, 0.1}).maxAbsT;
    spread = std::max(spread, std::abs(hi - lo) / std::max(lo, hi));
  }
  o.require(stat <= 1e-8, "stationarity");
  o.require(fixed <= 1e-8, "fixed point");
  o.require(identity <= 1e-8, "perturbation identity");
  o.require(spread < 0.2, "T bounded uniformly");
  o.detail << " stationarity/kappa " << stat << ", fixed point " << fixed << ", identity " << identity
           << ", max|T| relative variation " << spread;
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(20100809);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<BodyOfRevolution> bodies;
  for (int n : kDims) {
    bodies.push_back(buildK(0.1, n));
    bodies.push_back(buildK(0.05, n));
  }
  bodies.push_back(buildL(0.1, 3, 32).body);
  bodies.push_back(buildL(0.05, 4, 32).body);
  double worstZ = 0.0;
  int cases = 0;
  for (int i = 0; i < 24; ++i) {
    const BodyOfRevolution& body = bodies[i % bodies.size()];
    const double phi = pi * unit(rng);
    const double t = (2.0 * unit(rng) - 1.0) * 0.9 * sectionHalfWidth(body);
    const McEstimate mc = sectionAreaMcOracle(body, phi, t, 1000000, rng());
    const double z = std::abs(mc.estimate - parallelSectionArea(body, phi, t)) / mc.standardError;
    worstZ = std::max(worstZ, z);
    ++cases;
  }
  o.require(cases >= 20, "case count");
  o.require(worstZ <= 4.0, "agreement");
  o.detail << " " << cases << " cases, max |z| = " << worstZ;
  return o;
}

Outcome criterion10(const Matrix& m) {
  Outcome o;
  double worstK = -1e300, worstL = -1e300;
  for (const auto& [cell, r] : m.reports) {
    worstK = std::max(worstK, r.brunnMinkowskiK);
    worstL = std::max(worstL, r.brunnMinkowskiL);
  }
  o.require(worstK <= 1e-8 && worstL <= 1e-8, "concavity");
  o.detail << " max second difference K " << worstK << ", L " << worstL;
  return o;
}

template <typename Fn>
Outcome guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    Outcome o;
    o.require(false, std::string("exception: ") + e.what());
    return o;
  }
}

}  // namespace

int main() {
  Matrix matrix;
  std::string matrixError;
  try {
    matrix = runMatrix();
  } catch (const std::exception& e) {
    matrixError = e.what();
  }
  const auto needsMatrix = [&](auto fn) {
    return guarded([&]() {
      if (!matrixError.empty()) throw std::runtime_error(matrixError);
      return fn(matrix);
    });
  };

  std::vector<std::pair<std::string, Outcome>> results;
  results.emplace_back("counterexample identity m_K = m_L", needsMatrix(criterion1));
  report(1, results.back().first, results.back().second);
  results.emplace_back("K not centrally symmetric, L origin symmetric", needsMatrix(criterion2));
  report(2, results.back().first, results.back().second);
  results.emplace_back("pole curvatures and convexity of K and L", needsMatrix(criterion3));
  report(3, results.back().first, results.back().second);
  results.emplace_back("convexity threshold of K", guarded(criterion4));
  report(4, results.back().first, results.back().second);
  results.emplace_back("Radon multipliers and round trips", guarded(criterion5));
  report(5, results.back().first, results.back().second);
  results.emplace_back("Fourier and spectral inversion agree", guarded(criterion6));
  report(6, results.back().first, results.back().second);
  results.emplace_back("symmetric and ellipsoid fixtures", guarded(criterion7));
  report(7, results.back().first, results.back().second);
  results.emplace_back("maximizer and perturbation diagnostics", needsMatrix(criterion8));
  report(8, results.back().first, results.back().second);
  results.emplace_back("quadrature areas agree with Monte Carlo", guarded(criterion9));
  report(9, results.back().first, results.back().second);
  results.emplace_back("Brunn-Minkowski concavity", needsMatrix(criterion10));
  report(10, results.back().first, results.back().second);

  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.second.passed; });
  std::printf("%s\n", all ? "all acceptance criteria passed" : "acceptance FAILED");
  return all ? 0 : 1;
}
