#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "klee/constants.hpp"
#include "klee/gegenbauer.hpp"
#include "klee/profile.hpp"
#include "klee/quadrature.hpp"
#include "klee/sections.hpp"

using namespace klee;
using std::numbers::pi;

TEST_CASE("unit ball constants") {
  CHECK(unitBallConstants(2).volume == doctest::Approx(pi).epsilon(1e-15));
  CHECK(unitBallConstants(2).surface == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(unitBallConstants(3).volume == doctest::Approx(4 * pi / 3).epsilon(1e-15));
  CHECK(unitBallConstants(3).surface == doctest::Approx(4 * pi).epsilon(1e-15));
  CHECK(unitBallConstants(4).volume == doctest::Approx(pi * pi / 2).epsilon(1e-15));
  CHECK(unitBallConstants(4).surface == doctest::Approx(2 * pi * pi).epsilon(1e-15));
  CHECK_THROWS_AS(unitBallConstants(0), std::invalid_argument);
  CHECK_THROWS_AS(unitBallConstants(-2), std::invalid_argument);
  for (int n = 3; n <= 12; ++n) {
    CHECK(ballVolume(n) == doctest::Approx(ballVolume(n - 2) * 2 * pi / n).epsilon(1e-14));
    CHECK(sphereArea(n) == doctest::Approx(n * ballVolume(n)).epsilon(1e-15));
  }
}

TEST_CASE("gauss-jacobi rules on the documented moments") {
  CHECK(gaussJacobiRule(5, 0.0).integrate([](double) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(gaussJacobiRule(5, -0.5).integrate([](double) { return 1.0; }) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(gaussJacobiRule(5, -0.5).integrate([](double s) { return s * s; }) ==
        doctest::Approx(pi / 2).epsilon(1e-14));
  CHECK_THROWS_AS(gaussJacobiRule(5, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(gaussJacobiRule(0, 0.0), std::invalid_argument);
}

TEST_CASE("gauss-jacobi rules: structure and mass") {
  for (double alpha : {-0.5, 0.0, 0.5, 1.0, 1.5, 3.0}) {
    for (int m : {1, 2, 7, 32, 128}) {
      const QuadratureRule r = gaussJacobiRule(m, alpha);
      REQUIRE(r.size() == static_cast<std::size_t>(m));
      CHECK(r.jacobiExponent == alpha);
      for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.weights[i] > 0.0);
        CHECK(std::abs(r.nodes[i]) < 1.0);
      }
      const double mass = std::sqrt(pi) * std::tgamma(alpha + 1) / std::tgamma(alpha + 1.5);
      CHECK(std::abs(r.integrate([](double) { return 1.0; }) - mass) <= 1e-12 * mass);
    }
  }
}

TEST_CASE("gauss-jacobi even moments against adaptive integration") {
  boost::math::quadrature::tanh_sinh<double> oracle;
  for (double alpha : {-0.5, 0.0, 0.5, 1.0}) {
    const QuadratureRule r = gaussJacobiRule(24, alpha);
    for (int j = 0; j <= 23; ++j) {
      const auto f = [&](double s, double sc) {
        const double d = std::abs(sc);
        return std::pow(s, 2 * j) * std::pow(d * (2.0 - d), alpha);
      };
      const double exact = oracle.integrate(f, -1.0, 1.0, 1e-15);
      const double got = r.integrate([&](double s) { return std::pow(s, 2 * j); });
      CHECK(std::abs(got - exact) <= 1e-10 * exact);
    }
  }
}

TEST_CASE("fit of constants and cos^2 in the Legendre case") {
  const auto one = fitGegenbauer([](double) { return 1.0; }, 0.5, 8);
  REQUIRE(one.series.coeffs.size() == 5);
  const double p0 = cachedGegenbauerBasis(0.5)->value(0, 0.3);
  CHECK(one.series.coeffs[0] * p0 == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t j = 1; j < one.series.coeffs.size(); ++j) CHECK(std::abs(one.series.coeffs[j]) < 1e-15);

  // cos^2 = 1/3 + (2/3) P_2 with orthonormal P_2 = sqrt(5/2) P_2.
  const auto sq = fitGegenbauer([](double phi) { return std::cos(phi) * std::cos(phi); }, 0.5, 8);
  CHECK(sq.series.coeffs[0] == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-14));
  CHECK(sq.series.coeffs[1] == doctest::Approx((2.0 / 3.0) / std::sqrt(2.5)).epsilon(1e-14));
  for (std::size_t j = 2; j < sq.series.coeffs.size(); ++j) CHECK(std::abs(sq.series.coeffs[j]) < 1e-15);

  const SeriesDerivatives d = spectralDerivatives(sq.series, pi / 4);
  CHECK(d.value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d.d1 == doctest::Approx(-1.0).epsilon(1e-13));
  const SeriesDerivatives c = spectralDerivatives(one.series, 1.1);
  CHECK(std::abs(c.d1) < 1e-14);
  CHECK(std::abs(c.d2) < 1e-14);
}

TEST_CASE("fit rejects odd degree") { CHECK_THROWS_AS(fitGegenbauer([](double) { return 1.0; }, 0.5, 7), std::invalid_argument); }

TEST_CASE("fit/eval round trip reproduces even trigonometric polynomials") {
  for (double lambda : {0.5, 1.0, 1.5}) {
    const auto f = [](double phi) {
      const double c = std::cos(phi);
      return 0.7 - 0.4 * std::pow(c, 2) + 1.3 * std::pow(c, 8) - 0.2 * std::pow(c, 20) + 0.05 * std::pow(c, 30);
    };
    const auto fit = fitGegenbauer(f, lambda, 30, {false, 512, 1e-10});
    double worst = 0.0;
    for (int j = 0; j <= 200; ++j) worst = std::max(worst, std::abs(evalSeries(fit.series, pi * j / 200) - f(pi * j / 200)));
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("spectral derivatives against central differences") {
  const auto f = [](double phi) { return std::exp(0.4 * std::cos(2 * phi)) / (1.5 + 0.3 * std::cos(phi) * std::cos(phi)); };
  const auto fit = fitGegenbauer(f, 1.0, 64);
  const double h = 1e-4;
  for (double phi : {0.2, 0.7, 1.3, 2.0, 2.9}) {
    const SeriesDerivatives d = spectralDerivatives(fit.series, phi);
    const double fd1 = (f(phi + h) - f(phi - h)) / (2 * h);
    const double fd2 = (f(phi + h) - 2 * f(phi) + f(phi - h)) / (h * h);
    CHECK(std::abs(d.d1 - fd1) <= 1e-6);
    CHECK(std::abs(d.d2 - fd2) <= 1e-6);
  }
}

TEST_CASE("under-resolved fits double and warn") {
  const auto f = [](double phi) { return 1.0 / (1.05 - std::cos(phi) * std::cos(phi)); };
  FitOptions noDoubling{false, 512, 1e-10};
  const auto fixed = fitGegenbauer(f, 0.5, 8, noDoubling);
  CHECK_FALSE(fixed.resolved);
  CHECK(fixed.warnings.size() == 1);
  const auto adaptive = fitGegenbauer(f, 0.5, 8);
  CHECK(adaptive.series.degree() > 8);
  CHECK_FALSE(adaptive.warnings.empty());
}

TEST_CASE("basis normalization matches the classical norm") {
  const auto basis = cachedGegenbauerBasis(1.5);
  const QuadratureRule r = gaussJacobiRule(64, 1.0);
  for (int k : {0, 1, 2, 5, 10, 40}) {
    const double norm = r.integrate([&](double x) { return basis->value(k, x) * basis->value(k, x); });
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("radial profiles: closed form, derivatives and bodies") {
  const RadialProfile k = kleeProfile(0.1);
  CHECK(k(pi / 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(k(0.0) == doctest::Approx(std::pow(1.1, -1.0 / 3.0)).epsilon(1e-15));
  CHECK(k(pi) == doctest::Approx(std::pow(0.9, -1.0 / 3.0)).epsilon(1e-15));
  CHECK(k(-0.4) == doctest::Approx(k(0.4)).epsilon(1e-15));
  CHECK(std::abs(k.derivatives(0.0).d1) < 1e-15);
  CHECK(std::abs(k.derivatives(pi).d1) < 1e-15);
  const double h = 1e-5;
  for (double phi : {0.3, 1.2, 2.5}) {
    const ProfileValue d = k.derivatives(phi);
    CHECK(d.d1 == doctest::Approx((k(phi + h) - k(phi - h)) / (2 * h)).epsilon(1e-8));
    CHECK(d.d2 == doctest::Approx((k(phi + h) - 2 * k(phi) + k(phi - h)) / (h * h)).epsilon(1e-5));
  }
  CHECK_THROWS_AS(kleeProfile(0.0), std::invalid_argument);
  CHECK_THROWS_AS(kleeProfile(1.0), std::invalid_argument);
  CHECK_THROWS_AS(kleeProfile(-0.1), std::invalid_argument);

  const BodyOfRevolution body(3, k);
  CHECK(body.minRadius() == doctest::Approx(std::pow(1.1, -1.0 / 3.0)).epsilon(1e-12));
  CHECK(body.maxRadius() == doctest::Approx(std::pow(0.9, -1.0 / 3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(BodyOfRevolution(1, k), std::invalid_argument);
  const RadialProfile negative = RadialProfile::closedForm([](double x) { return ProfileValue{x, 1.0, 0.0}; });
  CHECK_THROWS_AS(BodyOfRevolution(3, negative), std::invalid_argument);
}

TEST_CASE("series-backed profile agrees with its series") {
  const auto fit = fitGegenbauer([](double phi) { return 1.0 + 0.2 * std::cos(phi) * std::cos(phi); }, 0.5, 16);
  const RadialProfile p = RadialProfile::seriesBacked(fit.series, 0.5);
  CHECK(p.kind() == RadialProfile::Kind::SeriesBacked);
  for (double phi : {0.0, 0.5, 1.0, 2.0, pi}) {
    const double want = std::sqrt(1.0 + 0.2 * std::cos(phi) * std::cos(phi));
    CHECK(p(phi) == doctest::Approx(want).epsilon(1e-13));
  }
  CHECK(std::abs(p.derivatives(0.0).d1) < 1e-13);
}
