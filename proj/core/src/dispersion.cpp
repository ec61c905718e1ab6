#include "ductwave/dispersion.hpp"

#include <cmath>

#include "ductwave/errors.hpp"
#include "ductwave/numerics/adaptive.hpp"
#include "ductwave/numerics/parallel.hpp"
#include "ductwave/numerics/pv.hpp"

namespace ductwave {

namespace {

bool onCut(const VelocityProfile& p, Complex lambda) {
  return lambda.imag() == 0.0 && lambda.real() >= p.mMin() && lambda.real() <= p.mMax();
}

Complex plF(const VelocityProfile& p, Complex lambda) {
  Complex sum{0.0, 0.0};
  for (const PlSegment& s : p.segments())
    sum += (1.0 / s.alpha) * (1.0 / (s.m0 - lambda) - 1.0 / (s.m1 - lambda));
  return sum;
}

Complex plFPrime(const VelocityProfile& p, Complex lambda) {
  Complex sum{0.0, 0.0};
  for (const PlSegment& s : p.segments()) {
    const Complex d0 = s.m0 - lambda, d1 = s.m1 - lambda;
    sum += (1.0 / s.alpha) * (1.0 / (d0 * d0) - 1.0 / (d1 * d1));
  }
  return sum;
}

void requireOffNodes(const VelocityProfile& p, Complex lambda) {
  if (lambda.imag() != 0.0) return;
  for (double m : p.nodeValues())
    if (std::abs(lambda.real() - m) < 1e-13 * (1.0 + std::abs(m)))
      throw CutEvaluationError("evalF: lambda at a piecewise-linear node value");
}

// Signed inverse-calculus densities: nu = |mu'| > 0, nu' = s mu'', nu'' = s mu'''
// with s the monotonicity orientation. Written this way the boundary-value
// formulas hold for increasing and decreasing profiles alike.
struct CutDensities {
  const VelocityProfile* p;
  double s;
  double nu(double z) const { return s * p->inverseAt(z).mu1; }
  double d2(double z) const { return s * p->inverseAt(z).mu2; }
  double d3(double z) const { return s * p->inverseAt(z).mu3; }
};

}  // namespace

// Near-cut evaluations have a sharp peak at the y where M(y) = Re lambda.
// Splitting the integration there puts the peak at an interval endpoint, so
// the adaptive refinement cannot step over it at coarse scales.
template <class Integrand>
Complex integrateAcrossProfile(const VelocityProfile& p, Complex lambda,
                               Integrand&& f, const AdaptiveOptions& a) {
  const double re = lambda.real();
  if (re > p.mMin() && re < p.mMax() && std::abs(lambda.imag()) < 0.1) {
    const double yStar = p.inverseAt(re).mu;
    if (yStar > -1.0 + 1e-12 && yStar < 1.0 - 1e-12)
      return integrateAdaptive(f, -1.0, yStar, a) + integrateAdaptive(f, yStar, 1.0, a);
  }
  return integrateAdaptive(f, -1.0, 1.0, a);
}

Complex evalF(const VelocityProfile& profile, Complex lambda, const DispersionOptions& opt) {
  if (profile.isPiecewiseLinear()) {
    requireOffNodes(profile, lambda);
    return plF(profile, lambda);
  }
  if (onCut(profile, lambda))
    throw CutEvaluationError("evalF: lambda on the cut; use boundaryN/boundaryF");
  AdaptiveOptions a;
  a.relTol = opt.offCutRel;
  return integrateAcrossProfile(
      profile, lambda,
      [&](double y) {
        const Complex d = profile.evaluate(y) - lambda;
        return 1.0 / (d * d);
      },
      a);
}

Complex evalFPrime(const VelocityProfile& profile, Complex lambda,
                   const DispersionOptions& opt) {
  if (profile.isPiecewiseLinear()) {
    requireOffNodes(profile, lambda);
    return plFPrime(profile, lambda);
  }
  if (onCut(profile, lambda))
    throw CutEvaluationError("evalFPrime: lambda on the cut; use boundaryNPrime");
  AdaptiveOptions a;
  a.relTol = opt.offCutRel;
  return integrateAcrossProfile(
      profile, lambda,
      [&](double y) {
        const Complex d = profile.evaluate(y) - lambda;
        return 2.0 / (d * d * d);
      },
      a);
}

Complex evalN(const VelocityProfile& profile, Complex lambda, const DispersionOptions& opt) {
  const Complex denom = 2.0 - evalF(profile, lambda, opt);
  if (std::abs(denom) < opt.atPoleGuard)
    throw AtPoleError("evalN: lambda at a pole of the norming factor");
  return 1.0 / denom;
}

Complex evalNPrime(const VelocityProfile& profile, Complex lambda,
                   const DispersionOptions& opt) {
  const Complex denom = 2.0 - evalF(profile, lambda, opt);
  if (std::abs(denom) < opt.atPoleGuard)
    throw AtPoleError("evalNPrime: lambda at a pole of the norming factor");
  const Complex fp = evalFPrime(profile, lambda, opt);
  return fp / (denom * denom);
}

Complex boundaryF(const VelocityProfile& profile, double lambda, int side,
                  const DispersionOptions& opt) {
  if (profile.isPiecewiseLinear())
    throw UnsupportedClassError("boundaryF: smooth-class profiles only");
  profile.requireValid();
  const double a = profile.mMin(), b = profile.mMax();
  if (lambda <= a || lambda >= b)
    throw DomainError("boundaryF: lambda must lie strictly inside (M-, M+)");
  CutDensities cd{&profile, profile.orientation()};
  const double boundary = -cd.nu(b) / (b - lambda) + cd.nu(a) / (a - lambda);
  AdaptiveOptions ao;
  ao.relTol = 1e-12;
  ao.absTol = 0.1 * opt.boundaryAbs;
  const double pv = pvCauchy([&](double z) { return cd.d2(z); }, a, b, lambda, ao);
  return Complex{boundary + pv, side >= 0 ? kPi * cd.d2(lambda) : -kPi * cd.d2(lambda)};
}

Complex boundaryN(const VelocityProfile& profile, double lambda, int side,
                  const DispersionOptions& opt) {
  if (profile.isPiecewiseLinear())
    throw UnsupportedClassError("boundaryN: smooth-class profiles only");
  const double a = profile.mMin(), b = profile.mMax();
  // Endpoint values are exact; F± blows up logarithmically there.
  if (lambda == a || lambda == b) return Complex{0.0, 0.0};
  const Complex f = boundaryF(profile, lambda, side, opt);
  const Complex denom = 2.0 - f;
  if (std::abs(denom) < opt.atPoleGuard)
    throw AtPoleError("boundaryN: F± = 2 on the cut (real interior pole)");
  return 1.0 / denom;
}

Complex boundaryNPrime(const VelocityProfile& profile, double lambda, int side,
                       const DispersionOptions& opt) {
  if (profile.isPiecewiseLinear())
    throw UnsupportedClassError("boundaryNPrime: smooth-class profiles only");
  profile.requireValid();
  const double a = profile.mMin(), b = profile.mMax();
  CutDensities cd{&profile, profile.orientation()};
  // Endpoint values by continuity: 2 - F ~ nu(M+)/(M+ - lambda) near the top
  // end and ~ nu(M-)/(lambda - M-) near the bottom one, so N ~ linear with
  // slope -1/nu resp. +1/nu. Matches the limit of N' taken along the real
  // axis outside the cut.
  if (lambda == a) return Complex{1.0 / cd.nu(a), 0.0};
  if (lambda == b) return Complex{-1.0 / cd.nu(b), 0.0};
  const Complex f = boundaryF(profile, lambda, side, opt);
  const Complex denom = 2.0 - f;
  if (std::abs(denom) < opt.atPoleGuard)
    throw AtPoleError("boundaryNPrime: F± = 2 on the cut (real interior pole)");
  const double boundary2 = -cd.nu(b) / ((b - lambda) * (b - lambda)) +
                           cd.nu(a) / ((a - lambda) * (a - lambda)) -
                           cd.d2(b) / (b - lambda) + cd.d2(a) / (a - lambda);
  AdaptiveOptions ao;
  ao.relTol = 1e-12;
  ao.absTol = 0.1 * opt.boundaryAbs;
  const double pv = pvCauchy([&](double z) { return cd.d3(z); }, a, b, lambda, ao);
  const Complex fPrime{boundary2 + pv,
                       side >= 0 ? kPi * cd.d3(lambda) : -kPi * cd.d3(lambda)};
  return fPrime / (denom * denom);
}

DispersionTable DispersionTable::build(const VelocityProfile& profile, int cutGridSize,
                                       const DispersionOptions& opt) {
  if (cutGridSize < 2) throw DomainError("DispersionTable: cut grid too small");
  DispersionTable t;
  t.mMin = profile.mMin();
  t.mMax = profile.mMax();
  t.smoothClass = !profile.isPiecewiseLinear();

  // Chebyshev (first-kind) nodes: interior, clustered at the endpoints.
  const double mid = 0.5 * (t.mMin + t.mMax), half = 0.5 * (t.mMax - t.mMin);
  t.lambda.resize(cutGridSize);
  for (int q = 0; q < cutGridSize; ++q)
    t.lambda[q] = mid - half * std::cos((2.0 * q + 1.0) * kPi / (2.0 * cutGridSize));

  t.nPlus.resize(cutGridSize);
  t.nPrimePlus.resize(cutGridSize);
  if (t.smoothClass) {
    profile.requireValid();
    parallelFor(static_cast<std::size_t>(cutGridSize), [&](std::size_t q) {
      t.nPlus[q] = boundaryN(profile, t.lambda[q], +1, opt);
      t.nPrimePlus[q] = boundaryNPrime(profile, t.lambda[q], +1, opt);
    });
    t.nPrimeAtMin = boundaryNPrime(profile, t.mMin, +1, opt).real();
    t.nPrimeAtMax = boundaryNPrime(profile, t.mMax, +1, opt).real();
  } else {
    // Rational values on the real axis; no cut. At the extreme node values F
    // has a simple pole, so N = 0 and N' is the slope of the vanishing branch.
    for (int q = 0; q < cutGridSize; ++q) {
      t.nPlus[q] = evalN(profile, Complex{t.lambda[q], 0.0}, opt);
      t.nPrimePlus[q] = evalNPrime(profile, Complex{t.lambda[q], 0.0}, opt);
    }
    const auto& segs = profile.segments();
    const double alphaFirst = segs.front().alpha, alphaLast = segs.back().alpha;
    t.nPrimeAtMin = profile.increasing() ? alphaFirst : -alphaLast;
    t.nPrimeAtMax = profile.increasing() ? -alphaLast : alphaFirst;
  }
  return t;
}

void sampleBoundary(const VelocityProfile& profile, const std::vector<double>& lambdas,
                    std::vector<Complex>& nPlusOut, std::vector<Complex>& nPrimePlusOut,
                    const DispersionOptions& opt) {
  nPlusOut.resize(lambdas.size());
  nPrimePlusOut.resize(lambdas.size());
  parallelFor(lambdas.size(), [&](std::size_t q) {
    nPlusOut[q] = boundaryN(profile, lambdas[q], +1, opt);
    nPrimePlusOut[q] = boundaryNPrime(profile, lambdas[q], +1, opt);
  });
}

}  // namespace ductwave
