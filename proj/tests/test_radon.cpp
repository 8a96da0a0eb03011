#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "klee/chebyshev.hpp"
#include "klee/constants.hpp"
#include "klee/construction.hpp"
#include "klee/error.hpp"
#include "klee/fourier.hpp"
#include "klee/radon.hpp"

using namespace klee;
using std::numbers::pi;

namespace {

ZonalFunction constant(int n, double value = 1.0) {
  return ZonalFunction([value](double) { return value; }, Parity::Even, n);
}

// Fourier transform of |x|^{-n+p} at a unit vector.
double evenPowerTransform(int n, int p) {
  return std::pow(2.0, p) * std::pow(pi, 0.5 * n) * std::tgamma(0.5 * p) / std::tgamma(0.5 * (n - p));
}

// Fourier transform of x_n |x|^{-n+p-1} at the unit vector at angle phi, divided by i.
double oddPowerTransform(int n, int p, double phi) {
  return -std::cos(phi) * std::pow(2.0, p) * std::pow(pi, 0.5 * n) * std::tgamma(0.5 * (p + 1)) /
         std::tgamma(0.5 * (n - p + 1));
}

}  // namespace

TEST_CASE("spherical radon transform of simple functions") {
  for (double phi : {0.0, 0.4, pi / 2, 2.9}) CHECK(sphericalRadonAt(constant(3), phi) == doctest::Approx(2 * pi).epsilon(1e-14));
  for (int n : {4, 5, 7}) CHECK(sphericalRadonAt(constant(n), 1.2) == doctest::Approx(sphereArea(n - 1)).epsilon(1e-13));
  const ZonalFunction odd([](double phi) { return std::cos(phi); }, Parity::Odd, 4);
  for (double phi : {0.1, 1.0, 2.0}) CHECK(std::abs(sphericalRadonAt(odd, phi)) <= 1e-14);
  CHECK_THROWS_AS(ZonalFunction([](double phi) { return std::cos(phi); }, Parity::Even, 3), std::invalid_argument);
  CHECK_THROWS_AS(sphericalRadonAt(constant(2), 0.3), std::invalid_argument);
}

TEST_CASE("Funk-Hecke multipliers") {
  for (int n : {3, 4, 5, 6}) {
    const std::vector<double> lam = radonMultipliers(n, 20);
    CHECK(lam[0] == doctest::Approx(sphereArea(n - 1)).epsilon(1e-10));
    for (double l : lam) CHECK(l != 0.0);
  }
  CHECK(radonMultipliers(3, 2)[1] == doctest::Approx(-pi).epsilon(1e-8));

  // n = 4, k = 2: eigenfunction property at ten angles.
  const auto basis = cachedGegenbauerBasis(1.0);
  const ZonalFunction c2([&](double phi) { return basis->value(2, std::cos(phi)); }, Parity::Even, 4);
  const double lambda2 = radonMultipliers(4, 2)[1];
  double lo = 1e300, hi = -1e300;
  for (int j = 0; j < 10; ++j) {
    const double phi = 0.05 + 0.3 * j;
    const double p = basis->value(2, std::cos(phi));
    if (std::abs(p) < 0.05) continue;
    const double ratio = sphericalRadonAt(c2, phi) / p;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK((hi - lo) / std::abs(lambda2) <= 1e-10);
  CHECK(lambda2 == doctest::Approx(lo).epsilon(1e-10));
}

TEST_CASE("spectral inverse") {
  for (int n : {3, 4, 5}) {
    const TransformedZonal one = radonInverseSpectral(constant(n, sphereArea(n - 1)));
    for (double phi : {0.0, 0.8, 2.1}) CHECK(one(phi) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(one.method == TransformMethod::Spectral);
  }
  CHECK(radonInverseSpectral(constant(3, 2 * pi))(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  const ZonalFunction odd([](double phi) { return std::cos(phi); }, Parity::Odd, 3);
  CHECK_THROWS_AS(radonInverseSpectral(odd), std::invalid_argument);
}

TEST_CASE("round trips on smooth even functions") {
  for (int n : {3, 4, 5}) {
    const ZonalFunction g([](double phi) { return std::exp(0.3 * std::cos(2 * phi)) + 0.1 * std::pow(std::sin(phi), 4); },
                          Parity::Even, n);
    RadonOptions opts;
    opts.degree = 48;
    const TransformedZonal inv = radonInverseSpectral(g, opts);
    const ZonalFunction f = ZonalFunction::fromSeries(inv.series, n);
    double worst = 0.0;
    for (int j = 0; j <= 60; ++j) worst = std::max(worst, std::abs(sphericalRadonAt(f, pi * j / 60) - g(pi * j / 60)));
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("inversion amplification is reported") {
  const ZonalFunction rough([](double phi) { return 1.0 / (1.02 - std::pow(std::cos(phi), 2)); }, Parity::Even, 3);
  RadonOptions opts;
  opts.degree = 16;
  const TransformedZonal inv = radonInverseSpectral(rough, opts);
  CHECK_FALSE(inv.warnings.empty());
}

TEST_CASE("chebyshev interpolant") {
  ChebyshevInterpolant e([](double z) { return std::exp(z); }, -0.5, 0.5, 33);
  e.chop();
  const std::vector<double> a = e.taylorCoefficients();
  double factorial = 1.0;
  for (int k = 0; k < 5; ++k) {
    if (k > 0) factorial *= k;
    CHECK(a[k] == doctest::Approx(1.0 / factorial).epsilon(1e-9));
  }
  CHECK(e(0.3) == doctest::Approx(std::exp(0.3)).epsilon(1e-15));
  CHECK(e.derivativeAtMidpoint(3) == doctest::Approx(1.0).epsilon(1e-11));
  ChebyshevInterpolant kink([](double z) { return std::abs(z); }, -0.5, 0.5, 33);
  CHECK_THROWS_AS(kink.chop(), ResolutionError);
}

TEST_CASE("G_u section integral") {
  for (int n : {4, 5}) {
    const HomogeneousExtension g(constant(n), n - 1);
    CHECK(gSectionIntegral(g, 0.7, 1.0) == doctest::Approx(0.0));
    CHECK(gSectionIntegral(g, 0.7, -1.0) == doctest::Approx(0.0));
    for (double z : {-0.6, 0.0, 0.3}) {
      CHECK(gSectionIntegral(g, 0.7, z) ==
            doctest::Approx(std::pow(1 - z * z, 0.5 * (n - 3)) * sphereArea(n - 1)).epsilon(1e-13));
    }
  }
  const ZonalFunction f([](double phi) { return 1.0 + std::pow(std::cos(phi), 2); }, Parity::Even, 3);
  const HomogeneousExtension g3(f, 2);
  for (double phi : {0.2, 1.3}) CHECK(gSectionIntegral(g3, phi, 0.0) == doctest::Approx(sphericalRadonAt(f, phi)).epsilon(1e-13));
}

TEST_CASE("Fourier transforms of homogeneous functions: all four branches") {
  for (int n : {3, 4, 5}) {
    for (int p = 1; p <= n - 1; ++p) {
      const HomogeneousExtension even(constant(n), p);
      const auto e = fourierHomogeneous(even, 0.9);
      CHECK(e.real() == doctest::Approx(evenPowerTransform(n, p)).epsilon(1e-9));
      CHECK(e.imag() == 0.0);

      const ZonalFunction cosine([](double phi) { return std::cos(phi); }, Parity::Odd, n);
      const HomogeneousExtension odd(cosine, p);
      for (double phi : {0.3, 1.1, 2.5}) {
        const auto o = fourierHomogeneous(odd, phi);
        CHECK(o.real() == 0.0);
        CHECK(o.imag() == doctest::Approx(oddPowerTransform(n, p, phi)).epsilon(1e-8));
      }
    }
  }
  CHECK(fourierHomogeneous(HomogeneousExtension(constant(4), 3), 0.2).real() ==
        doctest::Approx(4 * pi * pi).epsilon(1e-10));
  CHECK_THROWS_AS(HomogeneousExtension(constant(4), 4), std::invalid_argument);
  CHECK_THROWS_AS(HomogeneousExtension(constant(4), 0), std::invalid_argument);
}

TEST_CASE("Fourier transform of degree -n+1 extensions is pi times the Radon transform") {
  const auto f1 = [](double phi) { return std::exp(0.5 * std::pow(std::cos(phi), 2)); };
  const auto f2 = [](double phi) { return 1.0 / (2.0 + std::cos(2 * phi)); };
  for (int n : {3, 4, 5}) {
    for (const auto& fn : {std::function<double(double)>(f1), std::function<double(double)>(f2)}) {
      const ZonalFunction f(fn, Parity::Even, n);
      const HomogeneousExtension g(f, 1);
      for (double phi : {0.0, 0.6, 1.5, 2.7}) {
        CHECK(std::abs(fourierHomogeneous(g, phi).real() - pi * sphericalRadonAt(f, phi)) <= 1e-6);
      }
    }
  }
}

TEST_CASE("derivative resolution errors surface") {
  const ZonalFunction sharp([](double phi) { return 1.0 / (1.0001 - std::pow(std::cos(phi), 2)); }, Parity::Even, 3);
  FourierOptions coarse;
  coarse.chebyshevPoints = 9;
  CHECK_THROWS_AS(fourierHomogeneous(HomogeneousExtension(sharp, 2), 1.2, coarse), ResolutionError);
}

TEST_CASE("Fourier route inverse") {
  for (int n : {3, 4, 5}) {
    const ZonalFunction g = constant(n, sphereArea(n - 1));
    for (double phi : {0.0, 1.0, 2.0}) CHECK(radonInverseFourierAt(g, phi) == doctest::Approx(1.0).epsilon(1e-9));
  }
  const ZonalFunction odd([](double phi) { return std::cos(phi); }, Parity::Odd, 3);
  CHECK_THROWS_AS(radonInverseFourierAt(odd, 0.3), std::invalid_argument);

  const SymmetricPartner partner = buildL(0.1, 3, 64);
  GegenbauerSeries scaled = partner.innerSectionSeries;
  for (double& c : scaled.coeffs) c *= 2.0;
  const ZonalFunction g = ZonalFunction::fromSeries(scaled, 3);
  const TransformedZonal fourier = radonInverseFourier(g, 16);
  CHECK(fourier.method == TransformMethod::Fourier);
  double worst = 0.0;
  for (std::size_t i = 0; i < fourier.phiGrid.size(); ++i) {
    worst = std::max(worst, std::abs(fourier.values[i] - evalSeries(partner.radialPowerSeries, fourier.phiGrid[i])));
  }
  CHECK(worst <= 1e-4);
}
