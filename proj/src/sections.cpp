#include "klee/sections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "klee/constants.hpp"
#include "klee/error.hpp"
#include "klee/quadrature.hpp"
#include "klee/roots.hpp"

namespace klee {

RadialProfile kleeProfile(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("kleeProfile: eps must lie in (0, 1)");
  }
  return RadialProfile::closedForm([eps](double x) {
    const double h = 1.0 + eps * x * x * x;
    const double h43 = std::pow(h, -4.0 / 3.0);
    const double value = std::cbrt(1.0 / h);
    const double d1 = -eps * x * x * h43;
    const double d2 = -2.0 * eps * x * h43 + 4.0 * eps * eps * x * x * x * x * h43 / h;
    return ProfileValue{value, d1, d2};
  });
}

namespace {

struct Frame {
  double t, c, sinPhi, s;
};

// Folds phi into [-pi, pi] and applies rho(t, -phi, -s) = rho(t, phi, s).
Frame makeFrame(double t, double phi, double s) {
  double a = std::remainder(phi, 2.0 * std::numbers::pi);
  if (a < 0.0) {
    a = -a;
    s = -s;
  }
  return {t, std::cos(a), std::sin(a), s};
}

void checkUnique(const std::function<double(double)>& residual, double lo, double hi, int samples) {
  if (samples < 2) return;
  int changes = 0;
  double prev = residual(lo);
  for (int i = 1; i < samples; ++i) {
    const double cur = residual(lo + (hi - lo) * i / (samples - 1));
    if ((cur > 0.0) != (prev > 0.0)) ++changes;
    prev = cur;
  }
  if (changes != 1) {
    std::ostringstream msg;
    msg << "section radius: " << changes << " sign changes on the bracket (parameter outside the validated regime)";
    if (changes == 0) throw NoBracketError(msg.str());
    throw NumericalError(msg.str());
  }
}

}  // namespace

double kleeResidual(const SectionGeometry& g, double rho) {
  const Frame f = makeFrame(g.t, g.phi, g.s);
  const double q2 = g.t * g.t + rho * rho;
  const double z = g.t * f.c + rho * f.s * f.sinPhi;
  return q2 * std::sqrt(q2) + g.eps * z * z * z - 1.0;
}

SectionPoint kleeSectionPoint(const SectionGeometry& g, const SolverOptions& options) {
  if (g.eps < 0.0 || g.eps >= 1.0) throw std::invalid_argument("kleeSectionPoint: eps must lie in [0, 1)");
  if (g.eps == 0.0) {
    if (std::abs(g.t) >= 1.0) throw NoBracketError("section radius: hyperplane misses the unit ball");
    const double r = std::sqrt(1.0 - g.t * g.t);
    return {r, -g.t / r};
  }
  const Frame f = makeFrame(g.t, g.phi, g.s);
  const double eps = g.eps;
  const double t = g.t;
  const double sS = f.s * f.sinPhi;
  auto eval = [&](double rho) {
    const double q = std::hypot(t, rho);
    const double z = t * f.c + rho * sS;
    return std::pair{q * q * q + eps * z * z * z - 1.0, 3.0 * rho * q + 3.0 * eps * z * z * sS};
  };
  const double lo = 1e-6;
  const double hi = 2.0 * std::cbrt(1.0 / (1.0 - eps));
  if (options.checkUniqueness) {
    checkUnique([&](double r) { return eval(r).first; }, lo, hi, options.uniquenessSamples);
  }
  const RootResult root = safeguardedNewton(eval, lo, hi, options.tolerance);
  const double rho = root.x;
  const double q = std::hypot(t, rho);
  const double z = t * f.c + rho * sS;
  const double drdt = -(q * t + eps * z * z * f.c) / (q * rho + eps * z * z * sS);
  return {rho, drdt};
}

double solveKleeSectionRadius(const SectionGeometry& g, const SolverOptions& options) {
  return kleeSectionPoint(g, options).r;
}

double gaugeResidual(const BodyOfRevolution& body, double t, double phi, double s, double r) {
  const Frame f = makeFrame(t, phi, s);
  const double q = std::hypot(t, r);
  const double z = t * f.c + r * f.s * f.sinPhi;
  return q / body.profile().atCos(std::clamp(z / q, -1.0, 1.0)) - 1.0;
}

namespace {

// Gauge g(x) = |x| / rho(x/|x|) and its partials in (q = |x|, z = x_n).
struct GaugePartials {
  double value, dq, dz;
};

GaugePartials gauge(const RadialProfile& profile, double q, double z) {
  const auto [rho, slope] = profile.valueAndSlopeRatioAtCos(std::clamp(z / q, -1.0, 1.0));
  const double inv = 1.0 / (rho * rho);
  return {q / rho, 1.0 / rho - (z / q) * slope * inv, slope * inv};
}

}  // namespace

SectionPoint generalSectionPoint(const BodyOfRevolution& body, double t, double phi, double s,
                                 const SolverOptions& options) {
  const Frame f = makeFrame(t, phi, s);
  const double sS = f.s * f.sinPhi;
  const RadialProfile& profile = body.profile();
  auto eval = [&](double r) {
    const double q = std::hypot(t, r);
    const double z = t * f.c + r * sS;
    const GaugePartials g = gauge(profile, q, z);
    return std::pair{g.value - 1.0, g.dq * (r / q) + g.dz * sS};
  };
  const double lo = 1e-6;
  const double hi = 2.0 * body.maxRadius();
  if (options.checkUniqueness) {
    checkUnique([&](double r) { return eval(r).first; }, lo, hi, options.uniquenessSamples);
  }
  const RootResult root = safeguardedNewton(eval, lo, hi, options.tolerance);
  const double r = root.x;
  const double q = std::hypot(t, r);
  const double z = t * f.c + r * sS;
  const GaugePartials g = gauge(profile, q, z);
  const double dGdt = g.dq * (t / q) + g.dz * f.c;
  const double dGdr = g.dq * (r / q) + g.dz * sS;
  return {r, -dGdt / dGdr};
}

double sectionRadiusGeneral(const BodyOfRevolution& body, double t, double phi, double s,
                            const SolverOptions& options) {
  return generalSectionPoint(body, t, phi, s, options).r;
}

SectionPoint sectionPoint(const BodyOfRevolution& body, double t, double phi, double s,
                          const SolverOptions& options) {
  if (auto eps = body.kleeEpsilon()) return kleeSectionPoint({t, phi, s, *eps}, options);
  return generalSectionPoint(body, t, phi, s, options);
}

double sectionHalfWidth(const BodyOfRevolution& body) {
  if (body.kleeEpsilon()) return std::min(0.25, body.minRadius() - 1e-6);
  return 0.9 * body.minRadius();
}

namespace {

void requireSectionDimension(const BodyOfRevolution& body) {
  if (body.dimension() < 3) throw std::invalid_argument("section areas need n >= 3");
}

}  // namespace

double parallelSectionArea(const BodyOfRevolution& body, double phi, double t,
                           const SectionOptions& options) {
  requireSectionDimension(body);
  const int n = body.dimension();
  const auto rule = cachedJacobiRule(options.quadratureNodes, 0.5 * (n - 4));
  double sum = 0.0;
  for (std::size_t i = 0; i < rule->size(); ++i) {
    const double r = sectionPoint(body, t, phi, rule->nodes[i], options.solver).r;
    sum += rule->weights[i] * std::pow(r, n - 1);
  }
  return sphereArea(n - 2) / (n - 1) * sum;
}

double parallelSectionAreaDerivative(const BodyOfRevolution& body, double phi, double t,
                                     const SectionOptions& options) {
  requireSectionDimension(body);
  const int n = body.dimension();
  const auto rule = cachedJacobiRule(options.quadratureNodes, 0.5 * (n - 4));
  double sum = 0.0;
  for (std::size_t i = 0; i < rule->size(); ++i) {
    const SectionPoint p = sectionPoint(body, t, phi, rule->nodes[i], options.solver);
    sum += rule->weights[i] * std::pow(p.r, n - 2) * p.drdt;
  }
  return sphereArea(n - 2) * sum;
}

SectionCurve innerSectionFunction(const BodyOfRevolution& body, double phi,
                                  const SectionOptions& options) {
  requireSectionDimension(body);
  const int n = body.dimension();
  const double halfWidth = sectionHalfWidth(body);
  if (!(halfWidth > 0.0)) throw NumericalError("innerSectionFunction: empty support interval");
  const double scale = ballVolume(n - 1);

  auto area = [&](double t) { return parallelSectionArea(body, phi, t, options); };
  auto slope = [&](double t) { return parallelSectionAreaDerivative(body, phi, t, options); };

  SectionCurve curve;
  curve.phi = phi;
  const MaximumResult coarse =
      goldenSectionMaximize(area, -halfWidth, halfWidth, options.maximizerWidth);
  double tStar = coarse.x;

  // A(t) only pins the maximizer to ~sqrt(machine eps); refine on A'(t) = 0.
  double h = std::max(1e-7, 10.0 * options.maximizerWidth);
  bool bracketed = false;
  double lo = 0, hi = 0;
  while (h < halfWidth) {
    lo = std::max(-halfWidth, tStar - h);
    hi = std::min(halfWidth, tStar + h);
    if (slope(lo) > 0.0 && slope(hi) < 0.0) {
      bracketed = true;
      break;
    }
    h *= 8.0;
  }
  if (bracketed) {
    tStar = illinoisRoot(slope, lo, hi, 1e-15, 1e-16 * scale).x;
  } else {
    const double probe = 1e-4;
    curve.flatMaximum = std::abs(slope(std::max(-halfWidth, tStar - probe))) < 1e-12 * scale &&
                        std::abs(slope(std::min(halfWidth, tStar + probe))) < 1e-12 * scale;
  }
  curve.tStar = tStar;
  curve.m = area(tStar);
  curve.stationarityResidual = std::abs(slope(tStar));

  if (options.gridSamples > 1) {
    curve.tGrid.resize(options.gridSamples);
    curve.areas.resize(options.gridSamples);
    for (int i = 0; i < options.gridSamples; ++i) {
      const double t = -halfWidth + 2.0 * halfWidth * i / (options.gridSamples - 1);
      curve.tGrid[i] = t;
      curve.areas[i] = area(t);
    }
  }
  return curve;
}

double concavityDefect(const SectionCurve& curve, int n) {
  double worst = -std::numeric_limits<double>::infinity();
  const double q = 1.0 / (n - 1);
  for (std::size_t i = 1; i + 1 < curve.areas.size(); ++i) {
    const double d = std::pow(curve.areas[i - 1], q) - 2.0 * std::pow(curve.areas[i], q) +
                     std::pow(curve.areas[i + 1], q);
    worst = std::max(worst, d);
  }
  return worst;
}

McEstimate sectionAreaMcOracle(const BodyOfRevolution& body, double phi, double t,
                               std::size_t samples, std::uint64_t seed) {
  if (samples < 1000) throw std::invalid_argument("sectionAreaMcOracle: need at least 1000 samples");
  requireSectionDimension(body);
  const int n = body.dimension();
  const int dim = n - 1;
  const double radius = body.maxRadius();
  const Frame f = makeFrame(t, phi, 0.0);

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;

  std::vector<double> y(dim);
  std::size_t hits = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    double norm2 = 0.0;
    for (double& c : y) {
      c = normal(rng);
      norm2 += c * c;
    }
    const double r = radius * std::pow(uniform(rng), 1.0 / dim) / std::sqrt(norm2);
    // y[0] is the coordinate along w, the in-plane direction tilted towards e_n.
    double y2 = 0.0;
    for (double c : y) y2 += c * c * r * r;
    const double q = std::sqrt(t * t + y2);
    if (q == 0.0) {
      ++hits;
      continue;
    }
    const double xn = t * f.c + y[0] * r * f.sinPhi;
    if (q <= body.profile().atCos(std::clamp(xn / q, -1.0, 1.0))) ++hits;
  }
  const double box = ballVolume(dim) * std::pow(radius, dim);
  const double p = static_cast<double>(hits) / samples;
  return {box * p, box * std::sqrt(p * (1.0 - p) / samples), seed, samples};
}

}  // namespace klee
