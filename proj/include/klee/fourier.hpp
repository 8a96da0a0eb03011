#pragma once

#include <complex>

#include "klee/radon.hpp"

namespace klee {

struct FourierOptions {
  int chebyshevPoints = 129;
  int quadratureNodes = 128;
  int outerNodes = 64;  // Gauss-Legendre nodes on each outer piece |z| in [1/2, 1]
};

/// G_u(z) = (1-z^2)^{(n-3)/2} int_{S^{n-1} cap u^perp} g(z u + sqrt(1-z^2) v) dv
/// with u at angle phi from e_n.
double gSectionIntegral(const HomogeneousExtension& g, double phi, double z,
                        int quadratureNodes = 128);

/// Fourier transform of the homogeneous extension at the unit vector u(phi).
/// Even g gives a real value, odd g a purely imaginary one.
std::complex<double> fourierHomogeneous(const HomogeneousExtension& g, double phi,
                                        const FourierOptions& options = {});

/// (pi / (2 pi)^n) * ghat with g extended with p = n - 1.
double radonInverseFourierAt(const ZonalFunction& g, double phi, const FourierOptions& options = {});

/// Inverse transform on the Gauss-Gegenbauer grid of the given degree, fitted.
TransformedZonal radonInverseFourier(const ZonalFunction& g, int degree = 64,
                                     const FourierOptions& options = {});

}  // namespace klee
