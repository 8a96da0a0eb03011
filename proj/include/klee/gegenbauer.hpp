#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "klee/quadrature.hpp"

namespace klee {

/// Gegenbauer polynomials C_k^lambda normalized to unit norm under the
/// weight (1-x^2)^(lambda-1/2). For lambda = (n-2)/2 these are the zonal
/// harmonics of S^{n-1} in x = cos(phi).
class GegenbauerBasis {
 public:
  /// Builds recurrence coefficients up to maxDegree and checks the
  /// normalization against Gauss-Jacobi quadrature (throws on mismatch).
  GegenbauerBasis(double lambda, int maxDegree);

  double lambda() const { return lambda_; }
  int maxDegree() const { return maxDegree_; }

  /// Orthonormal values p_0(x) .. p_degree(x).
  void values(double x, std::span<double> out) const;
  /// Values, first and second x-derivatives.
  void valuesAndDerivatives(double x, std::span<double> p, std::span<double> dp,
                            std::span<double> ddp) const;

  double value(int k, double x) const;

  /// sum_j c_j p_{2j}(x) without allocating.
  double sumEven(std::span<const double> evenCoeffs, double x) const;

  /// Norm of the classical (unnormalized) C_k^lambda.
  double classicalNormSquared(int k) const;

 private:
  double lambda_;
  int maxDegree_;
  double p0_;
  std::vector<double> a_;  // p_{k+1} = a_k x p_k - b_k p_{k-1}
  std::vector<double> b_;
};

/// Shared basis for lambda, valid at least up to degree 1024.
std::shared_ptr<const GegenbauerBasis> cachedGegenbauerBasis(double lambda);

/// Even zonal function as sum_k c_k p_k(cos phi) over even k.
struct GegenbauerSeries {
  double lambda = 0.5;
  std::vector<double> coeffs;  // coeffs[j] multiplies degree 2j
  std::shared_ptr<const GegenbauerBasis> basis;  // filled lazily when null

  int degree() const { return coeffs.empty() ? 0 : 2 * (static_cast<int>(coeffs.size()) - 1); }
  /// |c_N| / max_k |c_k|
  double tailRatio() const;
};

struct SeriesDerivatives {
  double value;
  double d1;  // d/dphi
  double d2;  // d^2/dphi^2
};

double evalSeries(const GegenbauerSeries& series, double phi);
/// Evaluation in x = cos(phi) directly (no trigonometry).
double evalSeriesAtCos(const GegenbauerSeries& series, double x);
SeriesDerivatives spectralDerivatives(const GegenbauerSeries& series, double phi);

struct FitOptions {
  bool adaptive = true;         // double N until the tail is resolved
  int maxDegree = 512;
  double tailTolerance = 1e-10; // relative to the largest coefficient
};

struct GegenbauerFit {
  GegenbauerSeries series;
  int requestedDegree = 0;
  double reconstructionError = 0.0;  // max |f - series| at the fit nodes
  bool resolved = true;
  std::vector<std::string> warnings;
};

/// Gauss-Gegenbauer nodes (as angles in (0, pi)) used when fitting degree N.
std::vector<double> gegenbauerGrid(double lambda, int degree);

/// Fits an even zonal function f(phi). Coefficients are discrete inner
/// products at the N+1 Gauss-Gegenbauer nodes, which makes the fit exact
/// for even polynomials in cos(phi) of degree <= N.
GegenbauerFit fitGegenbauer(const std::function<double(double)>& f, double lambda, int degree,
                            const FitOptions& options = {});

/// Same as fitGegenbauer but with values already sampled on gegenbauerGrid(lambda, degree).
GegenbauerSeries fitGegenbauerSamples(std::span<const double> values, double lambda, int degree);

}  // namespace klee
