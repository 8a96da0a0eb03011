#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "klee/constants.hpp"
#include "klee/construction.hpp"
#include "klee/verification.hpp"

using namespace klee;
using std::numbers::pi;

namespace {

RadialProfile symmetricFixture(double eps) {
  return RadialProfile::closedForm([eps](double x) {
    const double h = 1.0 + eps * x * x;
    return ProfileValue{std::pow(h, -2.0), -4.0 * eps * x * std::pow(h, -3.0),
                        -4.0 * eps * std::pow(h, -3.0) + 24.0 * eps * eps * x * x * std::pow(h, -4.0)};
  });
}

RadialProfile ellipsoidFixture(double eps) {
  return RadialProfile::closedForm([eps](double x) {
    const double h = 1.0 + eps * x;
    return ProfileValue{1.0 / h, -eps / (h * h), 2.0 * eps * eps / (h * h * h)};
  });
}

double centeredEllipsoid(double eps, double phi) {
  const double a = 1.0 / std::sqrt(1.0 - eps * eps);
  const double b = 1.0 / (1.0 - eps * eps);
  const double s = std::sin(phi), c = std::cos(phi);
  return 1.0 / std::sqrt(s * s / (a * a) + c * c / (b * b));
}

VerifyConfig quickConfig() {
  VerifyConfig c;
  c.checkPoints = 13;
  c.mcSamples = 20000;
  c.profileSamples = 65;
  return c;
}

}  // namespace

TEST_CASE("buildK") {
  const BodyOfRevolution K = buildK(0.1, 3);
  CHECK(K.dimension() == 3);
  CHECK(K.profile()(pi / 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(K.profile()(0.0) == doctest::Approx(std::pow(1.1, -1.0 / 3.0)).epsilon(1e-15));
  CHECK(K.kleeEpsilon().value() == 0.1);
  const BodyOfRevolution B = buildK(0.0, 4);
  CHECK_FALSE(B.kleeEpsilon().has_value());
  CHECK(B.profile()(1.0) == 1.0);
  CHECK_THROWS_AS(buildK(1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(buildK(-0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(buildK(0.1, 2), std::invalid_argument);
  const BodyOfRevolution nonConvex = buildK(0.95, 3);
  CHECK(minCurvature(nonConvex.profile()) < 0.0);
}

TEST_CASE("symmetric partner of the ball is the ball") {
  for (int n : {3, 4, 5}) {
    const SymmetricPartner p = buildL(0.0, n, 32);
    for (double phi : {0.0, 0.7, pi / 2, 2.6}) CHECK(p.body.profile()(phi) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(p.minRadialPower > 0.0);
  }
  PartnerOptions odd;
  odd.degree = 31;
  CHECK_THROWS_AS(buildSymmetricPartner(unitBall(3), odd), std::invalid_argument);
}

TEST_CASE("origin-symmetric fixture round-trips") {
  for (int n : {3, 4}) {
    const BodyOfRevolution source(n, symmetricFixture(0.1));
    const SymmetricPartner p = buildSymmetricPartner(source);
    double worst = 0.0;
    for (int j = 0; j <= 100; ++j) worst = std::max(worst, std::abs(p.body.profile()(pi * j / 100) - source.profile()(pi * j / 100)));
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("ellipsoid fixture yields the centered ellipsoid") {
  for (double eps : {0.1, 0.3}) {
    for (int n : {3, 5}) {
      const BodyOfRevolution source(n, ellipsoidFixture(eps));
      const SymmetricPartner p = buildSymmetricPartner(source);
      double worst = 0.0;
      for (int j = 0; j <= 100; ++j) {
        worst = std::max(worst, std::abs(p.body.profile()(pi * j / 100) - centeredEllipsoid(eps, pi * j / 100)));
      }
      CHECK(worst <= 1e-6);
    }
  }
}

TEST_CASE("curvature") {
  CHECK(profileCurvature(unitProfile(), 0.4) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(minCurvature(unitProfile()) == doctest::Approx(1.0).epsilon(1e-15));
  for (double eps : {0.02, 0.1, 0.5}) {
    const RadialProfile k = kleeProfile(eps);
    CHECK(std::abs(profileCurvature(k, 0.0) - std::pow(1 + eps, -2.0 / 3.0)) <= 1e-10);
    CHECK(std::abs(profileCurvature(k, pi) - std::pow(1 - eps, -2.0 / 3.0)) <= 1e-10);
    for (int j = 0; j <= 40; ++j) {
      const double phi = pi * j / 40;
      CHECK(profileCurvature(k, phi) == doctest::Approx(kleeCurvatureClosedForm(eps, phi)).epsilon(1e-12));
    }
  }
  CHECK(minCurvature(kleeProfile(0.5)) > 0.0);
  CHECK(minCurvature(kleeProfile(0.95)) < 0.0);
  const auto kappa = curvatureProfile(kleeProfile(0.1));
  CHECK(kappa(1.0) == doctest::Approx(kleeCurvatureClosedForm(0.1, 1.0)).epsilon(1e-12));
}

TEST_CASE("critical eps for convexity") {
  const double eps = criticalEpsilonK();
  CHECK(std::abs(eps - 0.9186) <= 1e-3);
  CHECK(eps >= 0.91);
  // Independent oracle: the numerator 1 + 2 eps c - eps c^3 is minimal at c = -sqrt(2/3).
  CHECK(eps == doctest::Approx(3.0 * std::sqrt(6.0) / 8.0).epsilon(1e-10));
}

TEST_CASE("central symmetry defect") {
  const SymmetryDefect ball = centralSymmetryDefect(unitBall(3));
  CHECK(ball.defect <= ball.gridNoise + 1e-15);
  CHECK(ball.center == doctest::Approx(0.0));
  const SymmetryDefect sym = centralSymmetryDefect(BodyOfRevolution(3, symmetricFixture(0.2)));
  CHECK(sym.defect <= sym.gridNoise + 1e-15);
  const SymmetryDefect k = centralSymmetryDefect(buildK(0.1, 3));
  CHECK(k.defect >= 10 * k.gridNoise);
  CHECK(k.defect > 0.0);
  const SymmetryDefect small = centralSymmetryDefect(buildK(0.02, 3));
  CHECK(small.defect >= 10 * small.gridNoise);
  CHECK(small.defect < k.defect);
  // The reflected ellipsoid is a translate: defect vanishes once centred at the midpoint.
  const SymmetryDefect ell = centralSymmetryDefect(BodyOfRevolution(3, ellipsoidFixture(0.3)));
  CHECK(ell.defect <= ell.gridNoise + 1e-12);
}

TEST_CASE("origin symmetry defect") {
  CHECK(originSymmetryDefect(unitProfile()) == 0.0);
  CHECK(originSymmetryDefect(kleeProfile(0.1)) > 0.01);
  const SymmetricPartner p = buildL(0.1, 3);
  CHECK(originSymmetryDefect(p.body.profile()) <= 1e-9);
}

TEST_CASE("verification passes for the documented cells") {
  const VerifyConfig c = quickConfig();
  for (auto [n, eps] : {std::pair{3, 0.1}, std::pair{4, 0.05}}) {
    const VerificationReport r = verifyCounterexample(eps, n, c);
    CAPTURE(n);
    CAPTURE(r.error);
    CHECK(r.passed);
    CHECK(r.mMismatch <= 1e-6 * ballVolume(n - 1));
    CHECK(r.curvatureMinK > 0.0);
    CHECK(r.curvatureMinL > 0.0);
    CHECK(r.centralSymmetryDefectK > r.defectFloor);
    CHECK(r.originSymmetryDefectL <= 1e-9);
    CHECK(r.lRouteAgreement <= 1e-7 * ballVolume(n - 1));
    CHECK(r.lMaxAbsTStar <= 1e-6);
    CHECK(r.schemaVersion == kReportSchemaVersion);
    CHECK(r.seed == c.seed);
    REQUIRE(r.check("m_identity") != nullptr);
    CHECK(r.check("m_identity")->passed);
  }
}

TEST_CASE("verification at eps = 0 reports balls and a failed asymmetry") {
  const VerificationReport r = verifyCounterexample(0.0, 3, quickConfig());
  CHECK(r.mMismatch <= 1e-10);
  for (double rho : r.rhoK) CHECK(rho == 1.0);
  for (double rho : r.rhoL) CHECK(rho == doctest::Approx(1.0).epsilon(1e-10));
  REQUIRE(r.check("asymmetry_K") != nullptr);
  CHECK_FALSE(r.check("asymmetry_K")->passed);
  CHECK_FALSE(r.passed);
}

TEST_CASE("verification at eps = 0.95 fails on convexity of K") {
  VerifyConfig c = quickConfig();
  c.degree = 16;
  c.adaptive = false;
  const VerificationReport r = verifyCounterexample(0.95, 3, c);
  CHECK_FALSE(r.passed);
  REQUIRE(r.check("curvature_K") != nullptr);
  CHECK_FALSE(r.check("curvature_K")->passed);
}

TEST_CASE("under-resolved degree is flagged") {
  VerifyConfig c = quickConfig();
  c.degree = 8;
  const VerificationReport r = verifyCounterexample(0.1, 3, c);
  bool flagged = false;
  for (const auto& w : r.warnings) flagged = flagged || w.find("under-resolved") != std::string::npos;
  CHECK(flagged);
  CHECK(r.degreeUsed > 8);
}

TEST_CASE("mismatch is stable under refinement") {
  VerifyConfig coarse = quickConfig();
  coarse.degree = 32;
  coarse.quadratureNodes = 64;
  VerifyConfig fine = quickConfig();
  fine.degree = 64;
  fine.quadratureNodes = 128;
  const VerificationReport a = verifyCounterexample(0.1, 3, coarse);
  const VerificationReport b = verifyCounterexample(0.1, 3, fine);
  CHECK(std::abs(a.mMismatch - b.mMismatch) < b.tolM);
}
