#include "ductwave/numerics/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "ductwave/types.hpp"

namespace ductwave {

namespace {

GaussRule computeRule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gaussLegendre(int n) {
  if (n < 1) throw std::invalid_argument("gaussLegendre: n must be >= 1");
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, computeRule(n)).first;
  return it->second;
}

PanelRule compositeRule(std::span<const double> breakpoints, int pointsPerPanel) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("compositeRule: need at least two breakpoints");
  const GaussRule& gl = gaussLegendre(pointsPerPanel);
  PanelRule out;
  out.nodes.reserve((breakpoints.size() - 1) * gl.nodes.size());
  out.weights.reserve(out.nodes.capacity());
  for (std::size_t p = 0; p + 1 < breakpoints.size(); ++p) {
    const double a = breakpoints[p], b = breakpoints[p + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
      out.nodes.push_back(mid + half * gl.nodes[q]);
      out.weights.push_back(half * gl.weights[q]);
    }
  }
  return out;
}

std::vector<double> uniformBreakpoints(double a, double b, double maxPanel) {
  if (!(b > a)) throw std::invalid_argument("uniformBreakpoints: b <= a");
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / maxPanel)));
  std::vector<double> pts(n + 1);
  for (int i = 0; i <= n; ++i) pts[i] = a + (b - a) * i / n;
  pts.front() = a;
  pts.back() = b;
  return pts;
}

std::vector<double> gradedBreakpoints(double a, double b, double maxPanel, int levels) {
  std::vector<double> pts = uniformBreakpoints(a, b, maxPanel);
  // Geometrically halve the first and last panel `levels` times.
  std::vector<double> extra;
  double dl = pts[1] - pts[0];
  double dr = pts.back() - pts[pts.size() - 2];
  for (int l = 0; l < levels; ++l) {
    dl *= 0.5;
    dr *= 0.5;
    extra.push_back(a + dl);
    extra.push_back(b - dr);
  }
  return mergeBreakpoints(std::move(pts), std::move(extra));
}

std::vector<double> mergeBreakpoints(std::vector<double> a, std::vector<double> b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  const double tiny = 1e-14 * (std::abs(a.front()) + std::abs(a.back()) + 1.0);
  std::vector<double> out;
  for (double v : a)
    if (out.empty() || v - out.back() > tiny) out.push_back(v);
  return out;
}

}  // namespace ductwave
