#pragma once

#include "ductwave/types.hpp"

namespace ductwave {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im(z) >= 0.
/// Rational-series evaluation; relative accuracy ~1e-13 on the closed
/// upper half plane.
Complex faddeeva(Complex z);

/// Error function of a complex argument.
Complex erfComplex(Complex z);

/// Exponential integral E1(z) for complex z off the negative real axis.
Complex expIntE1(Complex z);

/// Sine and cosine integrals Si(x), Ci(x) for x > 0 (Si extended oddly to x<=0).
double sinIntegral(double x);
double cosIntegral(double x);

/// P.V. integral of exp(-i kappa nu)/nu over [a, b] with a < 0 < b.
/// Reduces to log(b/|a|) at kappa = 0.
Complex pvOscillatoryLogTerm(double kappa, double a, double b);

}  // namespace ductwave
