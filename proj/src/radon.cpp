#include "klee/radon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "klee/constants.hpp"
#include "klee/error.hpp"
#include "klee/quadrature.hpp"

namespace klee {

ZonalFunction::ZonalFunction(std::function<double(double)> f, Parity parity, int n)
    : f_(std::move(f)), parity_(parity), n_(n) {
  if (n < 2) throw std::invalid_argument("ZonalFunction: dimension must be >= 2");
  atCos_ = [g = f_](double x) { return g(std::acos(std::clamp(x, -1.0, 1.0))); };
  const double sign = parity == Parity::Even ? 1.0 : -1.0;
  double scale = 1.0, defect = 0.0;
  for (int i = 0; i <= 16; ++i) {
    const double phi = 0.5 * std::numbers::pi * i / 16.0;
    const double a = f_(phi), b = f_(std::numbers::pi - phi);
    scale = std::max(scale, std::abs(a));
    defect = std::max(defect, std::abs(b - sign * a));
  }
  if (defect > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "ZonalFunction: declared " << (parity == Parity::Even ? "even" : "odd")
        << " parity violated by " << defect;
    throw std::invalid_argument(msg.str());
  }
}

double ZonalFunction::atCos(double x) const { return atCos_(x); }

ZonalFunction ZonalFunction::fromSeries(const GegenbauerSeries& series, int n) {
  ZonalFunction z([series](double phi) { return evalSeries(series, phi); }, Parity::Even, n);
  z.atCos_ = [series](double x) { return evalSeriesAtCos(series, x); };
  return z;
}

HomogeneousExtension::HomogeneousExtension(ZonalFunction base, int p) : base_(std::move(base)), p_(p) {
  if (p < 1 || p > base_.dimension() - 1) {
    throw std::invalid_argument("HomogeneousExtension: p must lie in {1, ..., n-1}");
  }
}

double HomogeneousExtension::operator()(double norm, double xn) const {
  return std::pow(norm, degree()) * base_.atCos(std::clamp(xn / norm, -1.0, 1.0));
}

namespace {

double lambdaFor(int n) { return 0.5 * (n - 2); }

template <class F>
double radonOfCosFunction(const F& atCos, int n, double phi, int quadratureNodes) {
  const auto rule = cachedJacobiRule(quadratureNodes, 0.5 * (n - 4));
  const double sn = std::sin(phi);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule->size(); ++i) sum += rule->weights[i] * atCos(rule->nodes[i] * sn);
  return sphereArea(n - 2) * sum;
}

void requireRadonDimension(int n) {
  if (n < 3) throw std::invalid_argument("spherical Radon transform needs n >= 3");
}

}  // namespace

double sphericalRadonAt(const ZonalFunction& f, double phi, int quadratureNodes) {
  requireRadonDimension(f.dimension());
  return radonOfCosFunction([&](double x) { return f.atCos(x); }, f.dimension(), phi, quadratureNodes);
}

TransformedZonal sphericalRadon(const ZonalFunction& f, const RadonOptions& options) {
  requireRadonDimension(f.dimension());
  TransformedZonal out;
  out.method = TransformMethod::Spectral;
  out.phiGrid = gegenbauerGrid(lambdaFor(f.dimension()), options.degree);
  out.values.resize(out.phiGrid.size());
  for (std::size_t i = 0; i < out.phiGrid.size(); ++i) {
    out.values[i] = sphericalRadonAt(f, out.phiGrid[i], options.quadratureNodes);
  }
  out.series = fitGegenbauerSamples(out.values, lambdaFor(f.dimension()), options.degree);
  out.tailRatio = out.series.tailRatio();
  return out;
}

std::vector<double> radonMultipliers(int n, int degree, int quadratureNodes) {
  requireRadonDimension(n);
  if (degree < 0 || degree % 2 != 0) throw std::invalid_argument("radonMultipliers: degree must be even");
  const auto basis = cachedGegenbauerBasis(lambdaFor(n));
  // The pole is the best-conditioned reading point; the others are fallbacks.
  const double candidates[] = {0.0, 0.37, 0.91, 1.23};
  std::vector<double> multipliers;
  for (int k = 0; k <= degree; k += 2) {
    const double peak = basis->value(k, 1.0);
    bool found = false;
    for (double phi : candidates) {
      const double denom = basis->value(k, std::cos(phi));
      if (std::abs(denom) < 1e-3 * std::abs(peak)) continue;
      const double image = radonOfCosFunction([&](double x) { return basis->value(k, x); }, n, phi,
                                              quadratureNodes);
      multipliers.push_back(image / denom);
      found = true;
      break;
    }
    if (!found) {
      throw NumericalError("radonMultipliers: no well-conditioned reading point for degree " +
                           std::to_string(k));
    }
    if (multipliers.back() == 0.0) {
      throw NumericalError("radonMultipliers: vanishing multiplier at degree " + std::to_string(k));
    }
  }
  return multipliers;
}

GegenbauerSeries radonInverseSeries(const GegenbauerSeries& g, int n, int quadratureNodes) {
  const std::vector<double> lambda = radonMultipliers(n, g.degree(), quadratureNodes);
  GegenbauerSeries out = g;
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] /= lambda[j];
  return out;
}

GegenbauerSeries radonForwardSeries(const GegenbauerSeries& f, int n, int quadratureNodes) {
  const std::vector<double> lambda = radonMultipliers(n, f.degree(), quadratureNodes);
  GegenbauerSeries out = f;
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] *= lambda[j];
  return out;
}

TransformedZonal radonInverseSpectral(const ZonalFunction& g, const RadonOptions& options) {
  requireRadonDimension(g.dimension());
  if (g.parity() != Parity::Even) {
    throw std::invalid_argument("radonInverseSpectral: the transform is injective only on even functions");
  }
  const int n = g.dimension();
  const GegenbauerFit fit =
      fitGegenbauer([&](double phi) { return g(phi); }, lambdaFor(n), options.degree);
  TransformedZonal out;
  out.method = TransformMethod::Spectral;
  out.warnings = fit.warnings;
  out.series = radonInverseSeries(fit.series, n, options.quadratureNodes);
  out.tailRatio = out.series.tailRatio();
  if (out.tailRatio > options.inversionTailWarning) {
    std::ostringstream msg;
    msg << "inverse transform tail ratio " << out.tailRatio << " exceeds "
        << options.inversionTailWarning << " (inversion amplification)";
    out.warnings.push_back(msg.str());
  }
  out.phiGrid = gegenbauerGrid(lambdaFor(n), out.series.degree());
  out.values.resize(out.phiGrid.size());
  for (std::size_t i = 0; i < out.phiGrid.size(); ++i) out.values[i] = evalSeries(out.series, out.phiGrid[i]);
  return out;
}

}  // namespace klee
