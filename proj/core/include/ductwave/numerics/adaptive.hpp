#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "ductwave/numerics/gauss.hpp"

namespace ductwave {

struct AdaptiveOptions {
  double relTol = 1e-10;
  double absTol = 0.0;   // absolute floor on the whole-interval error
  int maxDepth = 48;
  std::size_t maxIntervals = 200000;
};

namespace detail {

template <class F>
auto glFixed(F&& f, double a, double b, const GaussRule& rule) {
  using R = decltype(f(0.5 * (a + b)));
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  R acc{};
  for (std::size_t q = 0; q < rule.nodes.size(); ++q)
    acc += rule.weights[q] * f(mid + half * rule.nodes[q]);
  return acc * half;
}

}  // namespace detail

/// Adaptive Gauss-Legendre integration of f over [a, b].
///
/// Each interval is accepted when the GL15 estimate agrees with the sum of the
/// two half-interval GL15 estimates to the locally apportioned tolerance.
template <class F>
auto integrateAdaptive(F&& f, double a, double b, const AdaptiveOptions& opt = {}) {
  using R = decltype(f(0.5 * (a + b)));
  const GaussRule& rule = gaussLegendre(15);

  struct Item {
    double a, b;
    R coarse;
    int depth;
  };

  // First pass gives the error scale; refined below as the estimate sharpens.
  R whole = detail::glFixed(f, a, b, rule);
  double scale = std::abs(whole);

  std::vector<Item> stack;
  stack.push_back({a, b, whole, 0});
  R total{};
  std::size_t produced = 1;

  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (it.a + it.b);
    R left = detail::glFixed(f, it.a, mid, rule);
    R right = detail::glFixed(f, mid, it.b, rule);
    R fine = left + right;
    const double err = std::abs(fine - it.coarse);
    const double frac = (it.b - it.a) / (b - a);
    const double tol = std::max(opt.absTol, opt.relTol * scale) * std::max(frac, 1e-300);
    // Roundoff floor: once the split estimates agree to the rounding error of
    // the pieces themselves, refinement cannot improve the sum any further.
    const double floor = 4e-16 * (std::abs(left) + std::abs(right));
    if (err <= tol || err <= floor || it.depth >= opt.maxDepth ||
        produced >= opt.maxIntervals) {
      total += fine;
      scale = std::max(scale, std::abs(total));
    } else {
      stack.push_back({it.a, mid, left, it.depth + 1});
      stack.push_back({mid, it.b, right, it.depth + 1});
      produced += 2;
    }
  }
  return total;
}

}  // namespace ductwave
