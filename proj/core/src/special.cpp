#include "ductwave/numerics/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ductwave {

namespace {

// Weideman's rational expansion of the Faddeeva function. The expansion
// coefficients are the Fourier coefficients of exp(-t^2)(L^2 + t^2) under
// the substitution t = L tan(theta/2); computed once by direct DFT.
constexpr int kWeidemanN = 40;

struct WeidemanTable {
  double L;
  std::array<double, kWeidemanN> coeff;  // highest degree first

  WeidemanTable() {
    const int M = 2 * kWeidemanN;
    const int M2 = 2 * M;
    L = std::sqrt(kWeidemanN / std::sqrt(2.0));
    std::array<double, 4 * kWeidemanN> f{};
    f[0] = 0.0;
    for (int j = 1; j < M2; ++j) {
      const int k = j - M;  // k in [-M+1, M-1]
      const double theta = k * kPi / M;
      const double t = L * std::tan(0.5 * theta);
      f[j] = std::exp(-t * t) * (L * L + t * t);
    }
    // a_n = Re(DFT(fftshift(f)))/M2 for n = 1..N, reversed.
    for (int n = 1; n <= kWeidemanN; ++n) {
      double acc = 0.0;
      for (int m = 0; m < M2; ++m) {
        const int shifted = (m + M) % M2;
        acc += f[shifted] * std::cos(2.0 * kPi * n * m / M2);
      }
      coeff[kWeidemanN - n] = acc / M2;
    }
  }
};

const WeidemanTable& weideman() {
  static const WeidemanTable table;
  return table;
}

}  // namespace

Complex faddeeva(Complex z) {
  if (z.imag() < 0.0)
    throw std::domain_error("faddeeva: argument must have Im(z) >= 0");
  const WeidemanTable& w = weideman();
  const Complex iz = kI * z;
  const Complex denom = w.L - iz;
  const Complex Z = (w.L + iz) / denom;
  Complex p{0.0, 0.0};
  for (int i = 0; i < kWeidemanN; ++i) p = p * Z + w.coeff[i];
  return 2.0 * p / (denom * denom) + (1.0 / std::sqrt(kPi)) / denom;
}

Complex erfComplex(Complex z) {
  if (z.real() < 0.0) return -erfComplex(-z);
  // erf(z) = 1 - exp(-z^2) w(iz), valid for Re(z) >= 0.
  const Complex expFactor = std::exp(-z * z);
  return 1.0 - expFactor * faddeeva(kI * z);
}

Complex expIntE1(Complex z) {
  const double az = std::abs(z);
  if (az == 0.0) throw std::domain_error("expIntE1: z = 0");
  if (z.real() < 0.0 && z.imag() == 0.0)
    throw std::domain_error("expIntE1: negative real axis (branch cut)");

  if (az <= 6.0) {
    // Power series around 0.
    constexpr double kEulerGamma = 0.57721566490153286061;
    Complex sum{0.0, 0.0};
    Complex term{1.0, 0.0};
    for (int n = 1; n <= 120; ++n) {
      term *= -z / static_cast<double>(n);
      const Complex add = term / static_cast<double>(n);
      sum += add;
      if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return -kEulerGamma - std::log(z) - sum;
  }

  // Modified Lentz continued fraction: E1 = e^{-z}/(z+1- 1/(z+3- 4/(z+5- ...))).
  const double tiny = 1e-300;
  Complex b = z + 1.0;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= 400; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    const Complex del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-z) * h;
}

double sinIntegral(double x) {
  if (x == 0.0) return 0.0;
  if (x < 0.0) return -sinIntegral(-x);
  const Complex e1 = expIntE1(Complex{0.0, x});
  return 0.5 * kPi + e1.imag();
}

double cosIntegral(double x) {
  if (x <= 0.0) throw std::domain_error("cosIntegral: requires x > 0");
  return -expIntE1(Complex{0.0, x}).real();
}

Complex pvOscillatoryLogTerm(double kappa, double a, double b) {
  if (!(a < 0.0 && 0.0 < b))
    throw std::domain_error("pvOscillatoryLogTerm: requires a < 0 < b");
  if (kappa == 0.0) return Complex{std::log(b / -a), 0.0};
  const double k = std::abs(kappa);
  const double real = cosIntegral(k * b) - cosIntegral(k * -a);
  const double imag = -(sinIntegral(k * b) + sinIntegral(k * -a));
  return Complex{real, kappa > 0.0 ? imag : -imag};
}

}  // namespace ductwave
