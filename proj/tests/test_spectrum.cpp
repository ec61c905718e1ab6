#include <doctest.h>

#include <cmath>

#include "ductwave/dispersion.hpp"
#include "ductwave/profile.hpp"
#include "ductwave/spectrum.hpp"

using namespace ductwave;

namespace {

VelocityProfile linearPl() { return VelocityProfile::piecewiseLinear({-1, 1}, {-1, 1}); }
VelocityProfile examplePl() {
  return VelocityProfile::piecewiseLinear({-1.0, 0.0, 1.0}, {0.0, 1.0, 3.0});
}

}  // namespace

TEST_CASE("closed-form spectrum of the linear profile") {
  auto lin = linearPl();
  auto ext = findExteriorPoles(lin);
  REQUIRE(ext.plus.has_value());
  REQUIRE(ext.minus.has_value());
  CHECK(ext.plus->lambda == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(ext.minus->lambda == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(ext.plus->residue == doctest::Approx(1.0 / (4.0 * std::sqrt(2.0))).epsilon(1e-12));
  CHECK(ext.minus->residue ==
        doctest::Approx(-1.0 / (4.0 * std::sqrt(2.0))).epsilon(1e-12));

  auto interior = findInteriorPoles(lin);
  CHECK(interior.interior.empty());
  CHECK(interior.clearedDegree == 2);
  CHECK(interior.complexRoots.empty());
  REQUIRE(interior.exteriorRoots.size() == 2);
}

TEST_CASE("exterior pole of the exponential profile sits in (e, 3)") {
  auto expP = VelocityProfile::exponential(1.0, 0.0);
  auto ext = findExteriorPoles(expP);
  REQUIRE(ext.plus.has_value());
  CHECK(ext.plus->lambda > std::exp(1.0));
  CHECK(ext.plus->lambda < 3.0);
  REQUIRE(ext.minus.has_value());
  CHECK(ext.minus->lambda < expP.mMin());
}

TEST_CASE("residue matches the limit of (lambda - lambda+) N(lambda)") {
  auto expP = VelocityProfile::exponential(1.0, 0.0);
  auto ext = findExteriorPoles(expP);
  REQUIRE(ext.plus.has_value());
  const double lp = ext.plus->lambda;
  // Richardson extrapolation of (lambda - lp) N(lambda) along the real axis.
  auto probe = [&](double h) {
    return h * evalN(expP, Complex{lp + h, 0.0}).real();
  };
  const double r1 = probe(1e-4), r2 = probe(5e-5);
  const double extrapolated = 2.0 * r2 - r1;
  CHECK(extrapolated == doctest::Approx(ext.plus->residue).epsilon(1e-8));
}

TEST_CASE("interior poles of the worked piecewise-linear profile") {
  auto pl = examplePl();
  auto res = findInteriorPoles(pl);
  // Cleared polynomial has degree #nodes = 3: two exterior + one interior root.
  CHECK(res.clearedDegree == 3);
  CHECK(res.complexRoots.empty());
  REQUIRE(res.interior.size() == 1);
  CHECK(res.interior[0].lambda > 1.0);
  CHECK(res.interior[0].lambda < 3.0);

  auto ext = findExteriorPoles(pl);
  REQUIRE(ext.plus.has_value());
  REQUIRE(ext.minus.has_value());
  CHECK(ext.minus->lambda < 0.0);
  CHECK(ext.plus->lambda > 3.0);
  // The polynomial's exterior roots agree with bracketing+Newton.
  REQUIRE(res.exteriorRoots.size() == 2);
  CHECK(res.exteriorRoots.front() == doctest::Approx(ext.minus->lambda).epsilon(1e-10));
  CHECK(res.exteriorRoots.back() == doctest::Approx(ext.plus->lambda).epsilon(1e-10));
}

TEST_CASE("all residues of N sum to zero (partial fractions bookkeeping)") {
  // N - 1/2 is a proper rational function vanishing like lambda^-2, so the
  // residues over every pole cancel.
  for (auto pl : {examplePl(),
                  VelocityProfile::piecewiseLinear({-1.0, -0.3, 0.4, 1.0},
                                                   {0.0, 0.5, 1.4, 3.1}),
                  VelocityProfile::piecewiseLinear({-1.0, -0.5, 0.0, 0.5, 1.0},
                                                   {-2.0, -1.4, -0.5, 0.9, 3.0})}) {
    auto ext = findExteriorPoles(pl);
    auto in = findInteriorPoles(pl);
    REQUIRE(ext.plus.has_value());
    REQUIRE(ext.minus.has_value());
    double sum = ext.plus->residue + ext.minus->residue;
    for (const auto& p : in.interior) sum += p.residue;
    CHECK(sum == doctest::Approx(0.0).epsilon(1e-10));
  }
}

TEST_CASE("stability certification of the built-in profiles") {
  for (auto p : {VelocityProfile::exponential(1.0, 0.0), VelocityProfile::quadratic(2.0)}) {
    auto cert = certifyStability(p);
    CHECK(cert.verdict == StabilityVerdict::Stable);
    CHECK(cert.windingUpperHalf == 0);
  }
  auto lin = linearPl();
  CHECK(certifyStability(lin).verdict == StabilityVerdict::Stable);
  CHECK(certifyStability(examplePl()).verdict == StabilityVerdict::Stable);
}

TEST_CASE("no roots appear in a region twice the derived localization box") {
  auto expP = VelocityProfile::exponential(1.0, 0.0);
  StabilityRegion big{expP.mMin() - 2.2, expP.mMax() + 2.2, -2.2, 2.2};
  auto cert = certifyStability(expP, big);
  CHECK(cert.verdict == StabilityVerdict::Stable);
  // And every located pole respects dist(lambda, [M-, M+]) <= 1.
  auto ext = findExteriorPoles(expP);
  CHECK(ext.plus->lambda - expP.mMax() <= 1.0);
  CHECK(expP.mMin() - ext.minus->lambda <= 1.0);
}

TEST_CASE("analyzeSpectrum aggregates everything") {
  auto spec = analyzeSpectrum(examplePl());
  CHECK(spec.stable());
  CHECK(spec.interior.size() == 1);
  REQUIRE(spec.plus.has_value());
  REQUIRE(spec.minus.has_value());
  CHECK(spec.complexRoots.empty());
  CHECK(verdictName(spec.verdict) == "Stable");
}
