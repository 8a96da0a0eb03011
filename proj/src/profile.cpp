#include "klee/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace klee {

double foldAngle(double phi) {
  constexpr double twoPi = 2.0 * std::numbers::pi;
  double a = std::fmod(phi, twoPi);
  if (a > std::numbers::pi) a -= twoPi;
  if (a < -std::numbers::pi) a += twoPi;
  return std::abs(a);
}

RadialProfile RadialProfile::closedForm(std::function<ProfileValue(double)> f) {
  RadialProfile p;
  p.kind_ = Kind::ClosedForm;
  p.closed_ = std::move(f);
  return p;
}

RadialProfile RadialProfile::seriesBacked(GegenbauerSeries series, double exponent) {
  RadialProfile p;
  p.kind_ = Kind::SeriesBacked;
  if (!series.basis) series.basis = cachedGegenbauerBasis(series.lambda);
  p.series_ = std::move(series);
  p.exponent_ = exponent;
  return p;
}

namespace {

// Value and first two x-derivatives of h^q given those of h.
ProfileValue power(const ProfileValue& h, double q) {
  if (q == 1.0) return h;
  const double v = std::pow(h.value, q);
  const double d1 = q * v / h.value * h.d1;
  const double d2 = q * v / h.value * h.d2 + q * (q - 1.0) * v / (h.value * h.value) * h.d1 * h.d1;
  return {v, d1, d2};
}

}  // namespace

// Returns F(x), F'(x), F''(x) for x = cos(phi).
static ProfileValue inCos(const RadialProfile& profile, const std::function<ProfileValue(double)>& closed,
                          double x, bool wantDerivatives) {
  if (profile.kind() == RadialProfile::Kind::ClosedForm) return closed(x);
  const GegenbauerSeries& s = *profile.series();
  if (!wantDerivatives) {
    return power({s.basis->sumEven(s.coeffs, x), 0.0, 0.0}, profile.seriesExponent());
  }
  const int deg = s.degree();
  std::vector<double> p(deg + 1), dp(deg + 1), ddp(deg + 1);
  s.basis->valuesAndDerivatives(x, p, dp, ddp);
  ProfileValue h{0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < s.coeffs.size(); ++j) {
    h.value += s.coeffs[j] * p[2 * j];
    h.d1 += s.coeffs[j] * dp[2 * j];
    h.d2 += s.coeffs[j] * ddp[2 * j];
  }
  return power(h, profile.seriesExponent());
}

double RadialProfile::atCos(double x) const { return inCos(*this, closed_, x, false).value; }

double RadialProfile::operator()(double phi) const { return atCos(std::cos(foldAngle(phi))); }

ProfileValue RadialProfile::derivatives(double phi) const {
  const double a = foldAngle(phi);
  const double x = std::cos(a), sn = std::sin(a);
  const ProfileValue f = inCos(*this, closed_, x, true);
  return {f.value, -sn * f.d1, sn * sn * f.d2 - x * f.d1};
}

std::pair<double, double> RadialProfile::valueAndSlopeRatioAtCos(double x) const {
  // rho'(theta) = -sin(theta) F'(x), so rho'/sin(theta) = -F'(x).
  const ProfileValue f = inCos(*this, closed_, x, true);
  return {f.value, -f.d1};
}

RadialProfile unitProfile() {
  return RadialProfile::closedForm([](double) { return ProfileValue{1.0, 0.0, 0.0}; });
}

BodyOfRevolution::BodyOfRevolution(int n, RadialProfile profile) : n_(n), profile_(std::move(profile)) {
  if (n < 2) throw std::invalid_argument("BodyOfRevolution: dimension must be >= 2, got " + std::to_string(n));
  constexpr int samples = 721;
  minRadius_ = std::numeric_limits<double>::infinity();
  maxRadius_ = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double r = profile_(std::numbers::pi * i / (samples - 1));
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("BodyOfRevolution: profile must be positive and finite on [0, pi]");
    }
    minRadius_ = std::min(minRadius_, r);
    maxRadius_ = std::max(maxRadius_, r);
  }
}

BodyOfRevolution BodyOfRevolution::withKleeEpsilon(double eps) const {
  BodyOfRevolution copy = *this;
  copy.kleeEps_ = eps;
  return copy;
}

BodyOfRevolution unitBall(int n) { return BodyOfRevolution(n, unitProfile()); }

}  // namespace klee
