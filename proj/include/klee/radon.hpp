#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "klee/gegenbauer.hpp"

namespace klee {

enum class Parity { Even, Odd };

/// Rotationally symmetric function on S^{n-1}, given as phi -> f(phi).
/// Parity refers to f(pi - phi) = +-f(phi), i.e. f(-u) = +-f(u).
class ZonalFunction {
 public:
  /// Checks the declared parity on a sample grid (throws std::invalid_argument).
  ZonalFunction(std::function<double(double)> f, Parity parity, int n);

  double operator()(double phi) const { return f_(phi); }
  /// Value at the unit vector whose n-th coordinate is x.
  double atCos(double x) const;
  Parity parity() const { return parity_; }
  int dimension() const { return n_; }

  static ZonalFunction fromSeries(const GegenbauerSeries& series, int n);

 private:
  std::function<double(double)> f_;
  std::function<double(double)> atCos_;
  Parity parity_;
  int n_;
};

/// |x|^{-n+p} f(x/|x|) for p in {1, ..., n-1}.
class HomogeneousExtension {
 public:
  HomogeneousExtension(ZonalFunction base, int p);

  const ZonalFunction& base() const { return base_; }
  int p() const { return p_; }
  int degree() const { return -base_.dimension() + p_; }
  Parity parity() const { return base_.parity(); }

  /// Value at a point given by |x| and its n-th coordinate.
  double operator()(double norm, double xn) const;

 private:
  ZonalFunction base_;
  int p_;
};

enum class TransformMethod { Spectral, Fourier };

struct TransformedZonal {
  std::vector<double> phiGrid;
  std::vector<double> values;
  GegenbauerSeries series;
  TransformMethod method = TransformMethod::Spectral;
  double tailRatio = 0.0;
  std::vector<std::string> warnings;

  double operator()(double phi) const { return evalSeries(series, phi); }
};

struct RadonOptions {
  int degree = 64;
  int quadratureNodes = 128;
  double inversionTailWarning = 1e-8;
};

/// (Rf)(phi) = omega_{n-2} int f(arccos(s sin phi)) (1-s^2)^{(n-4)/2} ds.
double sphericalRadonAt(const ZonalFunction& f, double phi, int quadratureNodes = 128);

/// Forward transform sampled on the Gauss-Gegenbauer grid of the given degree.
TransformedZonal sphericalRadon(const ZonalFunction& f, const RadonOptions& options = {});

/// Funk-Hecke multipliers lambda_k for even k <= N, obtained by applying
/// the numerical transform to each basis function. Entry j is degree 2j.
std::vector<double> radonMultipliers(int n, int degree, int quadratureNodes = 128);

/// Spectral inverse: fit, divide by multipliers, re-synthesize. Rejects odd g.
TransformedZonal radonInverseSpectral(const ZonalFunction& g, const RadonOptions& options = {});

/// Spectral inverse of an already fitted even series.
GegenbauerSeries radonInverseSeries(const GegenbauerSeries& g, int n, int quadratureNodes = 128);

/// Forward transform of an even series, computed spectrally (multipliers).
GegenbauerSeries radonForwardSeries(const GegenbauerSeries& f, int n, int quadratureNodes = 128);

}  // namespace klee
