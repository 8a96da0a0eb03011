#include <cmath>
#include <sstream>

#include "klee/app/commands.hpp"
#include "klee/app/output.hpp"
#include "klee/constants.hpp"
#include "klee/fourier.hpp"
#include "klee/quadrature.hpp"
#include "klee/radon.hpp"

namespace klee::app {

namespace {

SelftestResult compare(std::string name, double got, double want, double tol) {
  std::ostringstream d;
  d << "got " << formatDouble(got) << ", want " << formatDouble(want) << " (tol " << tol << ")";
  return {std::move(name), std::abs(got - want) <= tol, d.str()};
}

SelftestResult bound(std::string name, double value, double limit) {
  std::ostringstream d;
  d << formatDouble(value) << " <= " << limit;
  return {std::move(name), value <= limit, d.str()};
}

}  // namespace

std::vector<SelftestResult> runSelftests(const RunConfig& config) {
  std::vector<SelftestResult> out;
  const auto guarded = [&](const std::string& name, const std::function<SelftestResult()>& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("threw: ") + e.what()});
    }
  };

  guarded("quadrature_chebyshev_mass", [] {
    return compare("quadrature_chebyshev_mass", gaussJacobiRule(32, -0.5).integrate([](double) { return 1.0; }),
                   kPi, 1e-13);
  });
  guarded("quadrature_legendre_moment", [] {
    return compare("quadrature_legendre_moment",
                   gaussJacobiRule(16, 0.0).integrate([](double s) { return s * s; }), 2.0 / 3.0, 1e-14);
  });
  guarded("ball_constants", [] { return compare("ball_constants", sphereArea(3), 4.0 * kPi, 1e-13); });
  guarded("klee_profile_equator", [] {
    return compare("klee_profile_equator", kleeProfile(0.1)(kPi / 2), 1.0, 1e-15);
  });
  guarded("section_radius_cross_check", [] {
    const BodyOfRevolution K = buildK(0.1, 3);
    double worst = 0.0;
    for (double s : {-0.9, -0.3, 0.2, 0.8}) {
      const double a = solveKleeSectionRadius({0.07, 1.1, s, 0.1});
      const double b = sectionRadiusGeneral(K, 0.07, 1.1, s);
      worst = std::max(worst, std::abs(a - b));
    }
    return bound("section_radius_cross_check", worst, 1e-10);
  });
  guarded("ball_section_area", [&] {
    SectionOptions o;
    o.quadratureNodes = config.quadratureNodes;
    return compare("ball_section_area", parallelSectionArea(unitBall(3), 0.4, 0.5, o), kPi * 0.75, 1e-12);
  });
  guarded("radon_multipliers_n3", [&] {
    const std::vector<double> lam = radonMultipliers(3, 2, config.quadratureNodes);
    const double err = std::max(std::abs(lam[0] - 2.0 * kPi), std::abs(lam[1] + kPi));
    return bound("radon_multipliers_n3", err, 1e-8);
  });
  guarded("radon_round_trip", [&] {
    const auto f = [](double phi) {
      const double c = std::cos(phi);
      return 1.0 + 0.3 * c * c - 0.2 * std::pow(c, 6) + 0.05 * std::pow(c, 10);
    };
    const GegenbauerSeries s = fitGegenbauer(f, 0.5, 16).series;
    const GegenbauerSeries back = radonForwardSeries(radonInverseSeries(s, 3), 3);
    double worst = 0.0;
    for (int j = 0; j <= 50; ++j) worst = std::max(worst, std::abs(evalSeries(back, kPi * j / 50) - f(kPi * j / 50)));
    return bound("radon_round_trip", worst, 1e-9);
  });
  guarded("fourier_constant_n4", [] {
    const HomogeneousExtension g(ZonalFunction([](double) { return 1.0; }, Parity::Even, 4), 3);
    return compare("fourier_constant_n4", fourierHomogeneous(g, 0.7).real(), 4.0 * kPi * kPi, 1e-8);
  });
  guarded("critical_epsilon", [] {
    return compare("critical_epsilon", criticalEpsilonK(), 3.0 * std::sqrt(6.0) / 8.0, 1e-9);
  });
  guarded("pole_curvatures", [] {
    const RadialProfile p = kleeProfile(0.1);
    const double err = std::max(std::abs(profileCurvature(p, 0.0) - std::pow(1.1, -2.0 / 3.0)),
                                std::abs(profileCurvature(p, kPi) - std::pow(0.9, -2.0 / 3.0)));
    return bound("pole_curvatures", err, 1e-10);
  });
  guarded("monte_carlo_area", [&] {
    const BodyOfRevolution K = buildK(0.1, 3);
    const McEstimate mc = sectionAreaMcOracle(K, 0.9, 0.1, 20000, config.seed);
    const double exact = parallelSectionArea(K, 0.9, 0.1);
    return bound("monte_carlo_area", std::abs(mc.estimate - exact) / mc.standardError, 4.0);
  });
  guarded("small_verification", [&] {
    VerifyConfig vc = verifyConfigFrom(config);
    vc.degree = 16;
    vc.checkPoints = 9;
    vc.mcSamples = 5000;
    vc.profileSamples = 33;
    const VerificationReport r = verifyCounterexample(0.05, 3, vc);
    std::ostringstream d;
    d << "mMismatch " << formatDouble(r.mMismatch) << (r.error.empty() ? "" : ", error: " + r.error);
    return SelftestResult{"small_verification", r.passed, d.str()};
  });
  return out;
}

}  // namespace klee::app
