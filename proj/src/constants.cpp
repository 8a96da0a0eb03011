#include "klee/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace klee {

BallConstants unitBallConstants(int n) {
  if (n <= 0) throw std::invalid_argument("unitBallConstants: n must be >= 1, got " + std::to_string(n));
  const double half = 0.5 * n;
  const double volume = std::exp(half * std::log(kPi) - std::lgamma(half + 1.0));
  return {volume, n * volume};
}

}  // namespace klee
