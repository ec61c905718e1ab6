#include <doctest.h>

#include <cmath>
#include <complex>

#include "ductwave/numerics/adaptive.hpp"
#include "ductwave/numerics/fft.hpp"
#include "ductwave/numerics/gauss.hpp"
#include "ductwave/numerics/parallel.hpp"
#include "ductwave/numerics/pv.hpp"
#include "ductwave/numerics/special.hpp"
#include "ductwave/types.hpp"

using namespace ductwave;

TEST_CASE("gauss rule integrates polynomials of degree 2n-1 exactly") {
  const GaussRule& r = gaussLegendre(8);
  double acc = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i)
    acc += r.weights[i] * std::pow(r.nodes[i], 14);
  CHECK(acc == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
  double w = 0.0;
  for (double v : r.weights) w += v;
  CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("adaptive quadrature: smooth and near-singular integrands") {
  const double I1 = integrateAdaptive([](double x) { return std::exp(x); }, 0.0, 2.0);
  CHECK(I1 == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-12));

  // Narrow Lorentzian: int dx / ((x-0.3)^2 + eps^2) = (atan((1-0.3)/eps)+atan((1+0.3)/eps))/eps
  const double eps = 1e-6;
  const double I2 = integrateAdaptive(
      [eps](double x) { return 1.0 / ((x - 0.3) * (x - 0.3) + eps * eps); }, -1.0, 1.0);
  const double exact = (std::atan(0.7 / eps) + std::atan(1.3 / eps)) / eps;
  CHECK(I2 == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("pvCauchy matches the stated closed forms") {
  CHECK(pvCauchy([](double) { return 1.0; }, -1.0, 1.0, 0.0) ==
        doctest::Approx(0.0).epsilon(1e-13));
  CHECK(pvCauchy([](double z) { return z; }, -1.0, 1.0, 0.0) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(pvCauchy([](double) { return 1.0; }, 0.0, 2.0, 1.0) ==
        doctest::Approx(0.0).epsilon(1e-13));
  // Analytic density, reference from 30-digit arithmetic.
  CHECK(pvCauchy([](double z) { return std::exp(z); }, -1.0, 1.0, 0.3) ==
        doctest::Approx(1.62031402436190440981930738395).epsilon(1e-12));
  CHECK_THROWS_AS(pvCauchy([](double) { return 1.0; }, -1.0, 1.0, -1.0 + 1e-14),
                  DomainError);
}

TEST_CASE("sine/cosine integrals against reference values") {
  CHECK(sinIntegral(1.0) == doctest::Approx(0.946083070367183).epsilon(1e-12));
  CHECK(sinIntegral(10.0) == doctest::Approx(1.658347594218874).epsilon(1e-12));
  CHECK(cosIntegral(1.0) == doctest::Approx(0.337403922900968).epsilon(1e-12));
  CHECK(cosIntegral(10.0) == doctest::Approx(-0.045456433004455).epsilon(1e-10));
  CHECK(cosIntegral(0.5) == doctest::Approx(-0.177784078806613).epsilon(1e-12));
  // Large arguments via the continued fraction.
  CHECK(sinIntegral(2440.0) == doctest::Approx(1.571011553296938).epsilon(1e-12));
  CHECK(cosIntegral(2440.0) == doctest::Approx(3.48773664181874e-4).epsilon(1e-8));
}

TEST_CASE("complex exponential integral straddles the series/fraction switch") {
  const Complex a = expIntE1(Complex{0.0, 3.0});
  CHECK(a.real() == doctest::Approx(-0.119629786008000).epsilon(1e-12));
  CHECK(a.imag() == doctest::Approx(0.277856201204572).epsilon(1e-12));
  const Complex b = expIntE1(Complex{0.0, 8.0});
  CHECK(b.real() == doctest::Approx(-0.122433882532010).epsilon(1e-12));
  CHECK(b.imag() == doctest::Approx(0.003390494912045).epsilon(1e-9));
}

TEST_CASE("complex error function and Faddeeva") {
  const Complex e1 = erfComplex(Complex{1.0, 2.0});
  CHECK(e1.real() == doctest::Approx(-0.536643565778565).epsilon(1e-12));
  CHECK(e1.imag() == doctest::Approx(-5.049143703447035).epsilon(1e-12));
  const Complex e2 = erfComplex(Complex{0.5, -1.5});
  CHECK(e2.real() == doctest::Approx(3.386405333727650).epsilon(1e-12));
  CHECK(e2.imag() == doctest::Approx(-1.625835047244684).epsilon(1e-12));
  // Real axis agrees with std::erf.
  for (double x : {0.1, 0.7, 1.9, 3.5}) {
    CHECK(erfComplex(Complex{x, 0.0}).real() == doctest::Approx(std::erf(x)).epsilon(1e-13));
    CHECK(std::abs(erfComplex(Complex{x, 0.0}).imag()) < 1e-15);
  }
  const Complex w = faddeeva(Complex{1.0, 1.0});
  CHECK(w.real() == doctest::Approx(0.304744205256913).epsilon(1e-12));
  CHECK(w.imag() == doctest::Approx(0.208218938202832).epsilon(1e-12));
}

TEST_CASE("oscillatory principal-value log term") {
  const Complex t0 = pvOscillatoryLogTerm(0.0, -1.0, 2.0);
  CHECK(t0.real() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(t0.imag() == 0.0);

  const Complex t5 = pvOscillatoryLogTerm(5.0, -1.0, 2.0);
  CHECK(t5.real() == doctest::Approx(0.144573316652189).epsilon(1e-11));
  CHECK(t5.imag() == doctest::Approx(-3.208278839163548).epsilon(1e-11));
  // Conjugate for the mirrored frequency.
  const Complex tm = pvOscillatoryLogTerm(-5.0, -1.0, 2.0);
  CHECK(tm.real() == doctest::Approx(t5.real()).epsilon(1e-13));
  CHECK(tm.imag() == doctest::Approx(-t5.imag()).epsilon(1e-13));

  // Brute-force check with subtraction quadrature at moderate frequency.
  const double kappa = 3.0;
  auto integrand = [kappa](double nu) {
    return Complex{std::cos(kappa * nu), -std::sin(kappa * nu)};
  };
  const Complex direct =
      pvCauchy([&](double nu) { return integrand(nu); }, -1.0, 2.0, 0.0);
  const Complex viaSiCi = pvOscillatoryLogTerm(kappa, -1.0, 2.0);
  CHECK(std::abs(direct - viaSiCi) < 1e-10);
}

TEST_CASE("fft round trip and frequency indexing") {
  const int n = 64;
  Fft fft(n);
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) f[i] = std::sin(2.0 * kPi * 3 * i / n) + 0.25;
  std::vector<Complex> hat(n);
  fft.forwardReal(f, hat);
  CHECK(hat[0].real() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(hat[3].imag() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(hat[n - 3].imag() == doctest::Approx(0.5).epsilon(1e-12));
  std::vector<double> back(n);
  fft.inverseToReal(hat, back);
  for (int i = 0; i < n; ++i) CHECK(back[i] == doctest::Approx(f[i]).epsilon(1e-12));
  CHECK(fftFrequencyIndex(3, n) == 3);
  CHECK(fftFrequencyIndex(n - 3, n) == -3);
}

TEST_CASE("parallelFor covers the range deterministically") {
  std::vector<int> hits(1000, 0);
  parallelFor(hits.size(), [&](std::size_t i) { hits[i] += static_cast<int>(i); });
  long sum = 0;
  for (int h : hits) sum += h;
  CHECK(sum == 999L * 1000L / 2L);
}
