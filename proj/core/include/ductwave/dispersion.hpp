#pragma once

#include <vector>

#include "ductwave/profile.hpp"
#include "ductwave/types.hpp"

namespace ductwave {

/// Quadrature tolerances for the norming-factor machinery.
struct DispersionOptions {
  double offCutRel = 1e-10;    // relative tolerance off the cut
  double boundaryAbs = 1e-8;   // absolute tolerance for boundary values
  double atPoleGuard = 1e-12;  // |2 - F| below this counts as a pole hit
};

/// F(lambda) = int_{-1}^{1} (M(y) - lambda)^{-2} dy, off the cut [M-, M+].
/// Piecewise-linear profiles use the exact rational closed form.
Complex evalF(const VelocityProfile& profile, Complex lambda,
              const DispersionOptions& opt = {});

/// d F / d lambda, off the cut (exact for piecewise-linear profiles).
Complex evalFPrime(const VelocityProfile& profile, Complex lambda,
                   const DispersionOptions& opt = {});

/// Norming factor N = (2 - F)^{-1} and its derivative N' = -F' (2 - F)^{-2}.
Complex evalN(const VelocityProfile& profile, Complex lambda,
              const DispersionOptions& opt = {});
Complex evalNPrime(const VelocityProfile& profile, Complex lambda,
                   const DispersionOptions& opt = {});

/// Boundary values on the cut for smooth-class profiles. `side` is +1 for
/// the limit from above, -1 from below. At lambda = M± the exact endpoint
/// values are returned: N± = 0, and the real slopes N'±(M-) = +1/nu(M-),
/// N'±(M+) = -1/nu(M+) with nu = |mu'|, fixed by continuity with the
/// off-cut values (see FORMULAS.md).
Complex boundaryF(const VelocityProfile& profile, double lambda, int side,
                  const DispersionOptions& opt = {});
Complex boundaryN(const VelocityProfile& profile, double lambda, int side,
                  const DispersionOptions& opt = {});
Complex boundaryNPrime(const VelocityProfile& profile, double lambda, int side,
                       const DispersionOptions& opt = {});

/// Sampled boundary values N+(lambda), N'+(lambda) on the cut; the lower
/// boundary values are the conjugates. For piecewise-linear profiles the
/// columns hold the real rational values (no cut).
struct DispersionTable {
  std::vector<double> lambda;       // interior Chebyshev-distributed nodes (ascending)
  std::vector<Complex> nPlus;
  std::vector<Complex> nPrimePlus;
  double mMin = 0.0, mMax = 0.0;
  double nPrimeAtMin = 0.0, nPrimeAtMax = 0.0;  // endpoint N'± (real); N± = 0 there
  bool smoothClass = true;

  static DispersionTable build(const VelocityProfile& profile, int cutGridSize = 513,
                               const DispersionOptions& opt = {});
};

/// Boundary samples at arbitrary interior cut points (builds the quadrature
/// caches used by the kernel and solution modules).
void sampleBoundary(const VelocityProfile& profile, const std::vector<double>& lambdas,
                    std::vector<Complex>& nPlusOut, std::vector<Complex>& nPrimePlusOut,
                    const DispersionOptions& opt = {});

}  // namespace ductwave
