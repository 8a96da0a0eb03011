#include "klee/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "klee/chebyshev.hpp"
#include "klee/constants.hpp"
#include "klee/quadrature.hpp"

namespace klee {

namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

// Integral of |z|^{-p} (sgn z)^sign (G(z) - P(z)) over 1/2 <= |z| <= 1, with z = +-cos(theta).
double outerRemainder(const std::function<double(double)>& G, const std::vector<double>& taylor, int p,
                      bool signWeighted, int nodes) {
  const QuadratureRule rule = gaussLegendreRule(nodes, 0.0, kPi / 3.0);
  double total = 0.0;
  for (int side = 0; side < 2; ++side) {
    const double sgn = side == 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double theta = rule.nodes[i];
      const double z = sgn * std::cos(theta);
      double poly = 0.0;
      for (int k = p - 1; k >= 0; --k) poly = poly * z + (k < static_cast<int>(taylor.size()) ? taylor[k] : 0.0);
      double term = (G(z) - poly) * std::pow(std::abs(z), -p) * std::sin(theta);
      if (signWeighted) term *= sgn;
      total += rule.weights[i] * term;
    }
  }
  return total;
}

// Integral of |z|^{-p} (sgn z)^sign sum_{k>=p} a_k z^k over |z| <= 1/2.
double innerRemainder(const std::vector<double>& taylor, int p, bool signWeighted) {
  double total = 0.0;
  for (int k = p; k < static_cast<int>(taylor.size()); ++k) {
    const bool kOdd = (k % 2) != 0;
    // z^k |z|^{-p} (sgn z)^s integrates to zero unless k + s is even.
    if (kOdd != signWeighted) continue;
    const int e = k - p + 1;
    total += 2.0 * taylor[k] * std::pow(0.5, e) / e;
  }
  return total;
}

}  // namespace

double gSectionIntegral(const HomogeneousExtension& g, double phi, double z, int quadratureNodes) {
  const int n = g.base().dimension();
  if (std::abs(z) > 1.0) throw std::invalid_argument("gSectionIntegral: |z| must not exceed 1");
  const double w = std::max(0.0, 1.0 - z * z);
  const double root = std::sqrt(w);
  const double c = std::cos(phi), s = std::sin(phi);
  const auto rule = cachedJacobiRule(quadratureNodes, 0.5 * (n - 4));
  double sum = 0.0;
  for (std::size_t i = 0; i < rule->size(); ++i) {
    const double xn = z * c + root * rule->nodes[i] * s;
    sum += rule->weights[i] * g.base().atCos(std::clamp(xn, -1.0, 1.0));
  }
  const double prefactor = n == 3 ? 1.0 : std::pow(w, 0.5 * (n - 3));
  return prefactor * sphereArea(n - 2) * sum;
}

std::complex<double> fourierHomogeneous(const HomogeneousExtension& g, double phi,
                                        const FourierOptions& options) {
  const int p = g.p();
  const bool even = g.parity() == Parity::Even;
  const auto G = [&](double z) { return gSectionIntegral(g, phi, z, options.quadratureNodes); };

  ChebyshevInterpolant cheb(G, -0.5, 0.5, options.chebyshevPoints);
  cheb.chop();
  const std::vector<double> taylor = cheb.taylorCoefficients();
  const auto a = [&](int k) { return k < static_cast<int>(taylor.size()) ? taylor[k] : 0.0; };

  const bool pOdd = (p % 2) != 0;
  if (even && pOdd) {
    const double sign = ((p - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    return {sign * kPi * factorial(p - 1) * a(p - 1), 0.0};
  }
  if (!even && !pOdd) {
    const double sign = (p / 2) % 2 == 0 ? 1.0 : -1.0;
    return {0.0, sign * kPi * factorial(p - 1) * a(p - 1)};
  }

  const bool signWeighted = !even;
  const double integral =
      innerRemainder(taylor, p, signWeighted) + outerRemainder(G, taylor, p, signWeighted, options.outerNodes);
  double sigma = 0.0;
  for (int k = even ? 0 : 1; k <= p - 2; k += 2) sigma += a(k) / (1.0 + k - p);
  const double bracket = integral + 2.0 * sigma;
  if (even) {
    const double sign = (p / 2) % 2 == 0 ? 1.0 : -1.0;
    return {sign * factorial(p - 1) * bracket, 0.0};
  }
  const double sign = ((p + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  return {0.0, sign * factorial(p - 1) * bracket};
}

double radonInverseFourierAt(const ZonalFunction& g, double phi, const FourierOptions& options) {
  if (g.parity() != Parity::Even) {
    throw std::invalid_argument("radonInverseFourier: the transform is injective only on even functions");
  }
  const int n = g.dimension();
  const HomogeneousExtension ext(g, n - 1);
  return kPi / std::pow(2.0 * kPi, n) * fourierHomogeneous(ext, phi, options).real();
}

TransformedZonal radonInverseFourier(const ZonalFunction& g, int degree, const FourierOptions& options) {
  const int n = g.dimension();
  const double lambda = 0.5 * (n - 2);
  TransformedZonal out;
  out.method = TransformMethod::Fourier;
  out.phiGrid = gegenbauerGrid(lambda, degree);
  out.values.resize(out.phiGrid.size());
  for (std::size_t i = 0; i < out.phiGrid.size(); ++i) {
    out.values[i] = radonInverseFourierAt(g, out.phiGrid[i], options);
  }
  out.series = fitGegenbauerSamples(out.values, lambda, degree);
  out.tailRatio = out.series.tailRatio();
  return out;
}

}  // namespace klee
