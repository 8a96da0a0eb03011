#include "klee/roots.hpp"

#include <cmath>
#include <limits>
#include <tuple>
#include <sstream>

#include "klee/error.hpp"

namespace klee {

RootResult safeguardedNewton(const std::function<std::pair<double, double>(double)>& f, double lo,
                             double hi, double ftol, int maxIter) {
  auto [flo, dlo] = f(lo);
  auto [fhi, dhi] = f(hi);
  (void)dlo;
  (void)dhi;
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if ((flo > 0.0) == (fhi > 0.0)) {
    std::ostringstream msg;
    msg << "no sign change on [" << lo << ", " << hi << "]: f = " << flo << ", " << fhi;
    throw NoBracketError(msg.str());
  }
  // Orient so that f(xl) < 0 < f(xh).
  double xl = flo < 0.0 ? lo : hi;
  double xh = flo < 0.0 ? hi : lo;
  double x = 0.5 * (lo + hi);
  double dxOld = std::abs(hi - lo);
  double dx = dxOld;
  auto [fx, dfx] = f(x);
  for (int it = 1; it <= maxIter; ++it) {
    if (std::abs(fx) <= ftol) return {x, fx, it};
    const bool outside = ((x - xh) * dfx - fx) * ((x - xl) * dfx - fx) > 0.0;
    if (outside || std::abs(2.0 * fx) > std::abs(dxOld * dfx) || dfx == 0.0) {
      dxOld = dx;
      dx = 0.5 * (xh - xl);
      x = xl + dx;
    } else {
      dxOld = dx;
      dx = fx / dfx;
      x -= dx;
    }
    std::tie(fx, dfx) = f(x);
    if (fx < 0.0) {
      xl = x;
    } else {
      xh = x;
    }
    if (std::abs(xh - xl) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      return {x, fx, it};
    }
  }
  std::ostringstream msg;
  msg << "safeguarded Newton did not converge in " << maxIter << " iterations (residual " << fx << ")";
  throw ConvergenceError(msg.str());
}

RootResult illinoisRoot(const std::function<double(double)>& f, double lo, double hi, double xtol,
                        double ftol, int maxIter) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return {a, 0.0, 0};
  if (fb == 0.0) return {b, 0.0, 0};
  if ((fa > 0.0) == (fb > 0.0)) throw NoBracketError("illinoisRoot: no sign change on bracket");
  int side = 0;
  for (int it = 1; it <= maxIter; ++it) {
    const double c = (a * fb - b * fa) / (fb - fa);
    const double fc = f(c);
    if (std::abs(fc) <= ftol || std::abs(b - a) <= xtol) return {c, fc, it};
    if ((fc > 0.0) == (fb > 0.0)) {
      b = c;
      fb = fc;
      if (side == -1) fa *= 0.5;
      side = -1;
    } else {
      a = c;
      fa = fc;
      if (side == 1) fb *= 0.5;
      side = 1;
    }
    if (std::abs(b - a) <= xtol) return {std::abs(fa) < std::abs(fb) ? a : b, std::min(std::abs(fa), std::abs(fb)), it};
  }
  throw ConvergenceError("illinoisRoot: no convergence");
}

MaximumResult goldenSectionMaximize(const std::function<double(double)>& f, double lo, double hi,
                                    double width, int maxIter) {
  const double invPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invPhi * (b - a);
  double d = a + invPhi * (b - a);
  double fc = f(c), fd = f(d);
  int evals = 2;
  for (int it = 0; it < maxIter && (b - a) > width; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invPhi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  const bool left = fc >= fd;
  return {left ? c : d, left ? fc : fd, a, b, evals};
}

}  // namespace klee
