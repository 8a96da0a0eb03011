#pragma once

#include <functional>
#include <optional>

#include "klee/gegenbauer.hpp"

namespace klee {

struct ProfileValue {
  double value;
  double d1;
  double d2;
};

/// Radial function phi -> rho(phi) of a body of revolution, phi being the
/// angle with the positive x_n-axis. Arguments outside [0, pi] are folded
/// back using rho(-phi) = rho(phi).
class RadialProfile {
 public:
  enum class Kind { ClosedForm, SeriesBacked };

  /// Analytic profile given as a function of x = cos(phi): `f(x)` returns
  /// F(x), F'(x), F''(x). Angular derivatives follow by the chain rule.
  static RadialProfile closedForm(std::function<ProfileValue(double)> f);

  /// rho(phi) = h(phi)^exponent for an even Gegenbauer series h; derivatives
  /// come from the series by term-wise differentiation.
  static RadialProfile seriesBacked(GegenbauerSeries series, double exponent = 1.0);

  double operator()(double phi) const;
  ProfileValue derivatives(double phi) const;
  Kind kind() const { return kind_; }

  /// Backing series (series-backed profiles only).
  const GegenbauerSeries* series() const { return kind_ == Kind::SeriesBacked ? &series_ : nullptr; }
  double seriesExponent() const { return exponent_; }

  /// Value at x = cos(phi); avoids an arccos round trip for series profiles.
  double atCos(double x) const;
  /// Value and rho'(theta)/sin(theta) at cos(theta) = x. The ratio has a
  /// finite limit at the poles and is what the section solvers need.
  std::pair<double, double> valueAndSlopeRatioAtCos(double x) const;

 private:
  RadialProfile() = default;
  Kind kind_ = Kind::ClosedForm;
  std::function<ProfileValue(double)> closed_;
  GegenbauerSeries series_;
  double exponent_ = 1.0;
};

/// Folds any angle into [0, pi] using evenness and 2*pi periodicity.
double foldAngle(double phi);

/// The unit sphere profile rho == 1.
RadialProfile unitProfile();

/// A body of revolution about the x_n-axis in R^n.
class BodyOfRevolution {
 public:
  /// Throws std::invalid_argument for n < 2 or a profile that is not
  /// positive on [0, pi].
  BodyOfRevolution(int n, RadialProfile profile);

  int dimension() const { return n_; }
  const RadialProfile& profile() const { return profile_; }
  double minRadius() const { return minRadius_; }
  double maxRadius() const { return maxRadius_; }

  /// When set, the boundary is {|x|^3 + eps x_n^3 = 1} and section radii
  /// use the dedicated cubic solver.
  std::optional<double> kleeEpsilon() const { return kleeEps_; }
  BodyOfRevolution withKleeEpsilon(double eps) const;

 private:
  int n_;
  RadialProfile profile_;
  double minRadius_ = 0.0;
  double maxRadius_ = 0.0;
  std::optional<double> kleeEps_;
};

BodyOfRevolution unitBall(int n);

}  // namespace klee
