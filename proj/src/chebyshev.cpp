#include "klee/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "klee/error.hpp"

namespace klee {

ChebyshevInterpolant::ChebyshevInterpolant(const std::function<double(double)>& f, double a, double b,
                                           int points)
    : a_(a), b_(b) {
  if (points < 2) throw std::invalid_argument("ChebyshevInterpolant: need at least two points");
  if (!(b > a)) throw std::invalid_argument("ChebyshevInterpolant: empty interval");
  const int N = points - 1;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  std::vector<double> values(points);
  for (int j = 0; j <= N; ++j) values[j] = f(mid + half * std::cos(std::numbers::pi * j / N));
  coeffs_.assign(points, 0.0);
  for (int k = 0; k <= N; ++k) {
    double sum = 0.0;
    for (int j = 0; j <= N; ++j) {
      const double w = (j == 0 || j == N) ? 0.5 : 1.0;
      sum += w * values[j] * std::cos(std::numbers::pi * static_cast<double>(j) * k / N);
    }
    coeffs_[k] = 2.0 * sum / N;
  }
  coeffs_[0] *= 0.5;
  coeffs_[N] *= 0.5;
  length_ = points;
}

double ChebyshevInterpolant::operator()(double x) const {
  const double y = (2.0 * x - a_ - b_) / (b_ - a_);
  double b1 = 0.0, b2 = 0.0;
  for (int k = length_ - 1; k >= 1; --k) {
    const double b0 = 2.0 * y * b1 - b2 + coeffs_[k];
    b2 = b1;
    b1 = b0;
  }
  return y * b1 - b2 + coeffs_[0];
}

int ChebyshevInterpolant::chop(double relTol, double resolvedTol) {
  double peak = 0.0;
  for (double c : coeffs_) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) {
    length_ = 1;
    return length_;
  }
  const int total = static_cast<int>(coeffs_.size());
  double tail = 0.0;
  for (int k = std::max(0, total - 8); k < total; ++k) tail = std::max(tail, std::abs(coeffs_[k]));
  if (tail > resolvedTol * peak) {
    std::ostringstream msg;
    msg << "Chebyshev coefficients have not decayed (tail/peak = " << tail / peak << ")";
    throw ResolutionError(msg.str());
  }
  int keep = total;
  while (keep > 1 && std::abs(coeffs_[keep - 1]) <= relTol * peak) --keep;
  length_ = keep;
  return length_;
}

std::vector<double> ChebyshevInterpolant::taylorCoefficients() const {
  const int L = length_;
  // Monomial coefficients in y of sum c_k T_k(y).
  std::vector<double> mono(L, 0.0);
  std::vector<double> tPrev(L, 0.0), tCur(L, 0.0), tNext(L, 0.0);
  tPrev[0] = 1.0;
  mono[0] += coeffs_[0];
  if (L > 1) {
    tCur[1] = 1.0;
    mono[1] += coeffs_[1];
  }
  for (int k = 2; k < L; ++k) {
    std::fill(tNext.begin(), tNext.end(), 0.0);
    for (int i = 0; i < k; ++i) tNext[i + 1] += 2.0 * tCur[i];
    for (int i = 0; i <= k - 2; ++i) tNext[i] -= tPrev[i];
    for (int i = 0; i <= k; ++i) mono[i] += coeffs_[k] * tNext[i];
    std::swap(tPrev, tCur);
    std::swap(tCur, tNext);
  }
  const double half = 0.5 * (b_ - a_);
  double scale = 1.0;
  for (int k = 0; k < L; ++k) {
    mono[k] /= scale;
    scale *= half;
  }
  return mono;
}

double ChebyshevInterpolant::derivativeAtMidpoint(int k) const {
  const std::vector<double> taylor = taylorCoefficients();
  if (k >= static_cast<int>(taylor.size())) return 0.0;
  return std::tgamma(k + 1.0) * taylor[k];
}

}  // namespace klee
