#pragma once

#include <cmath>

#include "ductwave/errors.hpp"
#include "ductwave/numerics/adaptive.hpp"

namespace ductwave {

/// Cauchy principal value  P.V. int_a^b g(z)/(z - c) dz  for c strictly
/// inside (a, b), by singularity subtraction:
///
///   int_a^b (g(z) - g(c))/(z - c) dz  +  g(c) log((b - c)/(c - a)).
///
/// The subtracted integrand has a removable singularity at c, so plain
/// adaptive panel quadrature applies (Gauss nodes never touch c, which is a
/// panel endpoint).
template <class F>
auto pvCauchy(F&& g, double a, double b, double c, const AdaptiveOptions& opt = {}) {
  if (!(a < b)) throw DomainError("pvCauchy: empty interval");
  const double span = b - a;
  if (c - a < 1e-12 * span || b - c < 1e-12 * span)
    throw DomainError("pvCauchy: c too close to an interval endpoint");
  const auto gc = g(c);
  auto h = [&g, gc, c](double z) { return (g(z) - gc) / (z - c); };
  auto result = integrateAdaptive(h, a, c, opt) + integrateAdaptive(h, c, b, opt);
  return result + gc * std::log((b - c) / (c - a));
}

}  // namespace ductwave
