#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ductwave {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Returns the n-point Gauss-Legendre rule (cached; thread-safe).
const GaussRule& gaussLegendre(int n);

/// Nodes/weights of a composite rule: `rule` mapped onto each [b_i, b_{i+1}].
struct PanelRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  template <class F>
  auto sum(F&& f) const {
    using R = decltype(f(0.0));
    R acc{};
    for (std::size_t q = 0; q < nodes.size(); ++q) acc += weights[q] * f(nodes[q]);
    return acc;
  }
};

PanelRule compositeRule(std::span<const double> breakpoints, int pointsPerPanel = 16);

/// Breakpoint builders. All return an ascending list including both ends.

/// Uniform panels of size <= maxPanel.
std::vector<double> uniformBreakpoints(double a, double b, double maxPanel);

/// Uniform panels plus `levels` geometric halvings toward each end.
std::vector<double> gradedBreakpoints(double a, double b, double maxPanel, int levels);

/// Merge-sorts two breakpoint lists, deduplicating nearly equal entries.
std::vector<double> mergeBreakpoints(std::vector<double> a, std::vector<double> b);

}  // namespace ductwave
