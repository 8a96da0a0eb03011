#pragma once

#include <numbers>

namespace klee {

inline constexpr double kPi = std::numbers::pi;

struct BallConstants {
  double volume;   // kappa_n
  double surface;  // omega_n = n * kappa_n
};

/// Volume and surface area of the unit ball in R^n. Throws for n <= 0.
BallConstants unitBallConstants(int n);

inline double ballVolume(int n) { return unitBallConstants(n).volume; }
inline double sphereArea(int n) { return unitBallConstants(n).surface; }

}  // namespace klee
