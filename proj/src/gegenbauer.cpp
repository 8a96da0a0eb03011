#include "klee/gegenbauer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "klee/error.hpp"

namespace klee {

GegenbauerBasis::GegenbauerBasis(double lambda, int maxDegree)
    : lambda_(lambda), maxDegree_(maxDegree) {
  if (!(lambda > 0.0)) throw std::invalid_argument("GegenbauerBasis: lambda must be positive");
  if (maxDegree < 0) throw std::invalid_argument("GegenbauerBasis: negative degree");

  // h_k = pi 2^{1-2l} Gamma(k+2l) / (k! (k+l) Gamma(l)^2); ratios r_k = h_{k+1}/h_k.
  const double l = lambda;
  const double logH0 = std::log(std::numbers::pi) + (1.0 - 2.0 * l) * std::log(2.0) +
                       std::lgamma(2.0 * l) - std::log(l) - 2.0 * std::lgamma(l);
  p0_ = std::exp(-0.5 * logH0);

  std::vector<double> ratio(maxDegree + 1);
  for (int k = 0; k <= maxDegree; ++k) ratio[k] = (k + 2 * l) * (k + l) / ((k + 1.0) * (k + 1 + l));
  a_.resize(maxDegree + 1);
  b_.resize(maxDegree + 1);
  for (int k = 0; k <= maxDegree; ++k) {
    a_[k] = 2.0 * (k + l) / ((k + 1.0) * std::sqrt(ratio[k]));
    b_[k] = k == 0 ? 0.0 : (k + 2 * l - 1.0) / ((k + 1.0) * std::sqrt(ratio[k - 1] * ratio[k]));
  }

  // Validate the normalization against an independent Gauss-Jacobi rule.
  const int check = std::min(maxDegree, 40);
  const auto rule = cachedJacobiRule(check + 2, l - 0.5);
  std::vector<double> p(check + 1);
  std::vector<double> gram(check + 1, 0.0);
  double cross = 0.0;
  for (std::size_t i = 0; i < rule->size(); ++i) {
    values(rule->nodes[i], p);
    for (int k = 0; k <= check; ++k) gram[k] += rule->weights[i] * p[k] * p[k];
    if (check >= 2) cross += rule->weights[i] * p[0] * p[2];
  }
  for (int k = 0; k <= check; ++k) {
    if (std::abs(gram[k] - 1.0) > 1e-10) {
      std::ostringstream msg;
      msg << "GegenbauerBasis: normalization check failed at degree " << k << " (norm " << gram[k]
          << ")";
      throw NumericalError(msg.str());
    }
  }
  if (std::abs(cross) > 1e-10) throw NumericalError("GegenbauerBasis: orthogonality check failed");
}

void GegenbauerBasis::values(double x, std::span<double> out) const {
  const int deg = static_cast<int>(out.size()) - 1;
  if (deg > maxDegree_ + 1) throw std::out_of_range("GegenbauerBasis: degree too large");
  if (deg < 0) return;
  out[0] = p0_;
  if (deg >= 1) out[1] = a_[0] * x * p0_;
  for (int k = 1; k < deg; ++k) out[k + 1] = a_[k] * x * out[k] - b_[k] * out[k - 1];
}

void GegenbauerBasis::valuesAndDerivatives(double x, std::span<double> p, std::span<double> dp,
                                           std::span<double> ddp) const {
  const int deg = static_cast<int>(p.size()) - 1;
  if (deg > maxDegree_ + 1) throw std::out_of_range("GegenbauerBasis: degree too large");
  if (deg < 0) return;
  p[0] = p0_;
  dp[0] = 0.0;
  ddp[0] = 0.0;
  if (deg >= 1) {
    p[1] = a_[0] * x * p0_;
    dp[1] = a_[0] * p0_;
    ddp[1] = 0.0;
  }
  for (int k = 1; k < deg; ++k) {
    p[k + 1] = a_[k] * x * p[k] - b_[k] * p[k - 1];
    dp[k + 1] = a_[k] * (p[k] + x * dp[k]) - b_[k] * dp[k - 1];
    ddp[k + 1] = a_[k] * (2.0 * dp[k] + x * ddp[k]) - b_[k] * ddp[k - 1];
  }
}

double GegenbauerBasis::sumEven(std::span<const double> evenCoeffs, double x) const {
  const int deg = 2 * (static_cast<int>(evenCoeffs.size()) - 1);
  if (deg > maxDegree_ + 1) throw std::out_of_range("GegenbauerBasis: degree too large");
  double pPrev = 0.0, p = p0_;
  double sum = evenCoeffs[0] * p;
  for (int k = 0; k < deg; ++k) {
    const double pNext = a_[k] * x * p - b_[k] * pPrev;
    pPrev = p;
    p = pNext;
    if ((k + 1) % 2 == 0) sum += evenCoeffs[(k + 1) / 2] * p;
  }
  return sum;
}

double GegenbauerBasis::value(int k, double x) const {
  std::vector<double> p(k + 1);
  values(x, p);
  return p[k];
}

double GegenbauerBasis::classicalNormSquared(int k) const {
  const double l = lambda_;
  return std::exp(std::log(std::numbers::pi) + (1.0 - 2.0 * l) * std::log(2.0) +
                  std::lgamma(k + 2.0 * l) - std::lgamma(k + 1.0) - std::log(k + l) -
                  2.0 * std::lgamma(l));
}

std::shared_ptr<const GegenbauerBasis> cachedGegenbauerBasis(double lambda) {
  static std::mutex mutex;
  static std::map<double, std::shared_ptr<const GegenbauerBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[lambda];
  if (!slot) slot = std::make_shared<const GegenbauerBasis>(lambda, 1024);
  return slot;
}

double GegenbauerSeries::tailRatio() const {
  if (coeffs.empty()) return 0.0;
  double peak = 0.0;
  for (double c : coeffs) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) return 0.0;
  return std::abs(coeffs.back()) / peak;
}

namespace {

const GegenbauerBasis& basisOf(const GegenbauerSeries& series,
                               std::shared_ptr<const GegenbauerBasis>& holder) {
  if (series.basis) return *series.basis;
  holder = cachedGegenbauerBasis(series.lambda);
  return *holder;
}

}  // namespace

double evalSeriesAtCos(const GegenbauerSeries& series, double x) {
  if (series.coeffs.empty()) return 0.0;
  std::shared_ptr<const GegenbauerBasis> holder;
  return basisOf(series, holder).sumEven(series.coeffs, x);
}

double evalSeries(const GegenbauerSeries& series, double phi) {
  return evalSeriesAtCos(series, std::cos(phi));
}

SeriesDerivatives spectralDerivatives(const GegenbauerSeries& series, double phi) {
  if (series.coeffs.empty()) return {0.0, 0.0, 0.0};
  std::shared_ptr<const GegenbauerBasis> holder;
  const GegenbauerBasis& basis = basisOf(series, holder);
  const int deg = series.degree();
  std::vector<double> p(deg + 1), dp(deg + 1), ddp(deg + 1);
  const double x = std::cos(phi), sn = std::sin(phi);
  basis.valuesAndDerivatives(x, p, dp, ddp);
  double f = 0.0, fx = 0.0, fxx = 0.0;
  for (std::size_t j = 0; j < series.coeffs.size(); ++j) {
    f += series.coeffs[j] * p[2 * j];
    fx += series.coeffs[j] * dp[2 * j];
    fxx += series.coeffs[j] * ddp[2 * j];
  }
  // d/dphi = -sin(phi) d/dx
  return {f, -sn * fx, sn * sn * fxx - x * fx};
}

std::vector<double> gegenbauerGrid(double lambda, int degree) {
  const auto rule = cachedJacobiRule(degree + 1, lambda - 0.5);
  std::vector<double> phi(rule->size());
  // Ascending angle: descending x.
  for (std::size_t i = 0; i < rule->size(); ++i) phi[i] = std::acos(rule->nodes[rule->size() - 1 - i]);
  return phi;
}

GegenbauerSeries fitGegenbauerSamples(std::span<const double> values, double lambda, int degree) {
  if (degree < 0 || degree % 2 != 0) throw std::invalid_argument("fitGegenbauer: degree must be even and >= 0");
  const auto rule = cachedJacobiRule(degree + 1, lambda - 0.5);
  if (values.size() != rule->size()) throw std::invalid_argument("fitGegenbauer: sample count mismatch");
  GegenbauerSeries series;
  series.lambda = lambda;
  series.basis = cachedGegenbauerBasis(lambda);
  series.coeffs.assign(degree / 2 + 1, 0.0);
  std::vector<double> p(degree + 1);
  const std::size_t m = rule->size();
  for (std::size_t i = 0; i < m; ++i) {
    // values are ordered by ascending angle, i.e. descending node
    const double x = rule->nodes[m - 1 - i];
    const double w = rule->weights[m - 1 - i];
    series.basis->values(x, p);
    for (std::size_t j = 0; j < series.coeffs.size(); ++j) series.coeffs[j] += w * values[i] * p[2 * j];
  }
  return series;
}

GegenbauerFit fitGegenbauer(const std::function<double(double)>& f, double lambda, int degree,
                            const FitOptions& options) {
  if (degree < 0 || degree % 2 != 0) throw std::invalid_argument("fitGegenbauer: degree must be even and >= 0");
  GegenbauerFit fit;
  fit.requestedDegree = degree;
  int current = degree;
  while (true) {
    const std::vector<double> grid = gegenbauerGrid(lambda, current);
    std::vector<double> samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) samples[i] = f(grid[i]);
    fit.series = fitGegenbauerSamples(samples, lambda, current);
    fit.reconstructionError = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      fit.reconstructionError =
          std::max(fit.reconstructionError, std::abs(samples[i] - evalSeries(fit.series, grid[i])));
    }
    const double tail = fit.series.tailRatio();
    fit.resolved = tail <= options.tailTolerance;
    if (fit.resolved) break;
    std::ostringstream msg;
    msg << "Gegenbauer fit under-resolved at degree " << current << " (tail ratio " << tail << ")";
    fit.warnings.push_back(msg.str());
    if (!options.adaptive || current * 2 > options.maxDegree) break;
    current *= 2;
  }
  return fit;
}

}  // namespace klee
