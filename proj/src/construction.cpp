#include "klee/construction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "klee/constants.hpp"
#include "klee/error.hpp"
#include "klee/radon.hpp"
#include "klee/roots.hpp"

namespace klee {

BodyOfRevolution buildK(double eps, int n) {
  if (n < 3) throw std::invalid_argument("buildK: dimension must be at least 3");
  if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("buildK: eps must lie in [0, 1)");
  if (eps == 0.0) return unitBall(n);
  return BodyOfRevolution(n, kleeProfile(eps)).withKleeEpsilon(eps);
}

SymmetricPartner buildSymmetricPartner(const BodyOfRevolution& source, const PartnerOptions& options) {
  const int n = source.dimension();
  if (n < 3) throw std::invalid_argument("buildSymmetricPartner: dimension must be at least 3");
  if (options.degree < 2 || options.degree % 2 != 0) {
    throw std::invalid_argument("buildSymmetricPartner: spectral degree must be even and >= 2");
  }
  const double lambda = 0.5 * (n - 2);
  const FitOptions fitOptions{};

  SymmetricPartner out{unitBall(n), {}, {}, {}, {}, {}, options.degree, options.degree, 0.0, 0.0, {}};
  int degree = options.degree;
  while (true) {
    out.phiGrid = gegenbauerGrid(lambda, degree);
    out.innerSection.assign(out.phiGrid.size(), 0.0);
    out.tStar.assign(out.phiGrid.size(), 0.0);
    for (std::size_t i = 0; i < out.phiGrid.size(); ++i) {
      const SectionCurve curve = innerSectionFunction(source, out.phiGrid[i], options.sections);
      out.innerSection[i] = curve.m;
      out.tStar[i] = curve.tStar;
    }
    out.innerSectionSeries = fitGegenbauerSamples(out.innerSection, lambda, degree);
    const double tail = out.innerSectionSeries.tailRatio();
    if (tail <= fitOptions.tailTolerance) break;
    std::ostringstream msg;
    msg << "Gegenbauer fit under-resolved at degree " << degree << " (tail ratio " << tail << ")";
    out.warnings.push_back(msg.str());
    if (!options.adaptive || degree * 2 > fitOptions.maxDegree) break;
    degree *= 2;
  }
  out.degreeUsed = degree;

  GegenbauerSeries power =
      radonInverseSeries(out.innerSectionSeries, n, options.sections.quadratureNodes);
  for (double& c : power.coeffs) c *= (n - 1);
  out.inversionTail = power.tailRatio();
  if (out.inversionTail > 1e-8) {
    std::ostringstream msg;
    msg << "inverse transform tail ratio " << out.inversionTail << " exceeds 1e-08 (inversion amplification)";
    out.warnings.push_back(msg.str());
  }

  double minPower = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < out.phiGrid.size(); ++i) {
    minPower = std::min(minPower, evalSeries(power, out.phiGrid[i]));
  }
  constexpr int kDense = 2001;
  for (int j = 0; j < kDense; ++j) {
    minPower = std::min(minPower, evalSeries(power, kPi * j / (kDense - 1)));
  }
  out.minRadialPower = minPower;
  if (!(minPower > 0.0)) {
    std::ostringstream msg;
    msg << "(n-1) R^{-1} m is not positive (minimum " << minPower
        << "); the partner is not a star body at this eps";
    throw NumericalError(msg.str());
  }
  out.radialPowerSeries = power;
  out.body = BodyOfRevolution(n, RadialProfile::seriesBacked(power, 1.0 / (n - 1)));
  return out;
}

double profileCurvature(const RadialProfile& profile, double phi) {
  const ProfileValue d = profile.derivatives(phi);
  const double r = d.value, r1 = d.d1, r2 = d.d2;
  return (2.0 * r1 * r1 - r * r2 + r * r) / std::pow(r1 * r1 + r * r, 1.5);
}

std::function<double(double)> curvatureProfile(const RadialProfile& profile) {
  return [profile](double phi) { return profileCurvature(profile, phi); };
}

double minCurvature(const RadialProfile& profile, int gridPoints) {
  if (gridPoints < 2) throw std::invalid_argument("minCurvature: need at least two grid points");
  double lowest = std::numeric_limits<double>::infinity();
  for (int j = 0; j < gridPoints; ++j) {
    lowest = std::min(lowest, profileCurvature(profile, kPi * j / (gridPoints - 1)));
  }
  return lowest;
}

double kleeCurvatureClosedForm(double eps, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  const double h = 1.0 + eps * c * c * c;
  const double numerator = (h + 2.0 * eps * s * s * c) * std::pow(h, 4.0 / 3.0);
  const double denominator = std::pow(h * h + eps * eps * std::pow(c, 4) * s * s, 1.5);
  return numerator / denominator;
}

namespace {

double numeratorMinimum(double eps) {
  const auto numerator = [eps](double c) { return 1.0 + eps * c * c * c + 2.0 * eps * (1.0 - c * c) * c; };
  constexpr int kGrid = 4001;
  int best = 0;
  double bestValue = std::numeric_limits<double>::infinity();
  for (int j = 0; j < kGrid; ++j) {
    const double v = numerator(-1.0 + 2.0 * j / (kGrid - 1));
    if (v < bestValue) {
      bestValue = v;
      best = j;
    }
  }
  const double step = 2.0 / (kGrid - 1);
  const double lo = std::max(-1.0, -1.0 + (best - 1) * step);
  const double hi = std::min(1.0, -1.0 + (best + 1) * step);
  const MaximumResult r = goldenSectionMaximize([&](double c) { return -numerator(c); }, lo, hi, 1e-14, 200);
  return std::min(bestValue, -r.value);
}

}  // namespace

double criticalEpsilonK() {
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (numeratorMinimum(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

struct Point2 {
  double x;
  double y;
};

double distanceToPolyline(const Point2& p, const std::vector<Point2>& line) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    const double ax = line[i].x, ay = line[i].y;
    const double dx = line[i + 1].x - ax, dy = line[i + 1].y - ay;
    const double len2 = dx * dx + dy * dy;
    double u = len2 > 0.0 ? ((p.x - ax) * dx + (p.y - ay) * dy) / len2 : 0.0;
    u = std::clamp(u, 0.0, 1.0);
    const double ex = ax + u * dx - p.x, ey = ay + u * dy - p.y;
    best = std::min(best, ex * ex + ey * ey);
  }
  return std::sqrt(best);
}

// Half curve phi in [0, pi] (x >= 0). The full curve is symmetric in x, and
// so is its reflection, so the Hausdorff distance is attained on the halves.
std::vector<Point2> halfCurve(const RadialProfile& rho, int points) {
  std::vector<Point2> curve(points);
  for (int j = 0; j < points; ++j) {
    const double phi = kPi * j / (points - 1);
    const double r = rho(phi);
    curve[j] = {r * std::sin(phi), r * std::cos(phi)};
  }
  return curve;
}

double hausdorff(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  double d = 0.0;
  for (const Point2& p : a) d = std::max(d, distanceToPolyline(p, b));
  for (const Point2& p : b) d = std::max(d, distanceToPolyline(p, a));
  return d;
}

double reflectedDefect(const RadialProfile& rho, double center, int points) {
  const std::vector<Point2> curve = halfCurve(rho, points);
  std::vector<Point2> reflected(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) reflected[i] = {curve[i].x, 2.0 * center - curve[i].y};
  return hausdorff(curve, reflected);
}

// Largest distance between the curve at a mid-angle and the chord it replaces.
double chordError(const RadialProfile& rho, int points) {
  const std::vector<Point2> curve = halfCurve(rho, points);
  double err = 0.0;
  for (int j = 0; j + 1 < points; ++j) {
    const double phi = kPi * (j + 0.5) / (points - 1);
    const double r = rho(phi);
    const Point2 mid{r * std::sin(phi), r * std::cos(phi)};
    err = std::max(err, distanceToPolyline(mid, {curve[j], curve[j + 1]}));
  }
  return err;
}

}  // namespace

SymmetryDefect centralSymmetryDefect(const BodyOfRevolution& body, int gridPoints) {
  if (gridPoints < 8) throw std::invalid_argument("centralSymmetryDefect: grid too coarse");
  const RadialProfile& rho = body.profile();
  SymmetryDefect out;
  out.center = 0.5 * (rho(0.0) - rho(kPi));
  const double coarse = reflectedDefect(rho, out.center, gridPoints + 1);
  const double fine = reflectedDefect(rho, out.center, 2 * gridPoints + 1);
  out.defect = fine;
  out.gridPoints = 2 * gridPoints + 1;
  out.gridNoise = std::abs(fine - coarse) + chordError(rho, 2 * gridPoints + 1);
  return out;
}

double originSymmetryDefect(const RadialProfile& profile, int gridPoints) {
  double defect = 0.0;
  for (int j = 0; j < gridPoints; ++j) {
    const double phi = kPi * j / (gridPoints - 1);
    defect = std::max(defect, std::abs(profile(phi) - profile(kPi - phi)));
  }
  return defect;
}

}  // namespace klee
