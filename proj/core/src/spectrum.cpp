#include "ductwave/spectrum.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ductwave/errors.hpp"

namespace ductwave {

namespace {

double realF(const VelocityProfile& p, double lambda, const DispersionOptions& opt) {
  return evalF(p, Complex{lambda, 0.0}, opt).real();
}

// Bisection + Newton polish for the single root of F = 2 in a bracket where
// F - 2 changes sign and is monotone.
PolePair refineExterior(const VelocityProfile& p, double lo, double hi,
                        const SpectrumOptions& opt) {
  const DispersionOptions& dopt = opt.dispersion;
  double flo = realF(p, lo, dopt) - 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = realF(p, mid, dopt) - 2.0;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13 * (1.0 + std::abs(mid))) break;
  }
  double root = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    const double g = realF(p, root, dopt) - 2.0;
    const double gp = evalFPrime(p, Complex{root, 0.0}, dopt).real();
    if (gp == 0.0) break;
    const double step = g / gp;
    const double next = root - step;
    if (next <= lo || next >= hi) break;
    root = next;
    if (std::abs(step) < opt.rootTol * (1.0 + std::abs(root))) break;
  }
  const double fp = evalFPrime(p, Complex{root, 0.0}, dopt).real();
  return PolePair{root, -1.0 / fp};
}

// Polynomial as ascending coefficients. prod *= (v - lambda).
void multiplyLinear(std::vector<double>& prod, double v) {
  std::vector<double> out(prod.size() + 1, 0.0);
  for (std::size_t i = 0; i < prod.size(); ++i) {
    out[i] += v * prod[i];
    out[i + 1] -= prod[i];
  }
  prod.swap(out);
}

std::vector<double> productExcept(const std::vector<double>& nodes, int skip) {
  std::vector<double> prod{1.0};
  for (std::size_t j = 0; j < nodes.size(); ++j)
    if (static_cast<int>(j) != skip) multiplyLinear(prod, nodes[j]);
  return prod;
}

std::vector<Complex> polynomialRoots(std::vector<double> coeff) {
  // Strip trailing (leading-degree) zeros.
  while (coeff.size() > 1 && std::abs(coeff.back()) < 1e-14) coeff.pop_back();
  const int deg = static_cast<int>(coeff.size()) - 1;
  if (deg < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 0; i < deg; ++i) {
    companion(i, deg - 1) = -coeff[i] / coeff[deg];
    if (i + 1 < deg) companion(i + 1, i) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()[i];
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

// Winding number of F - 2 along the counterclockwise boundary of
// [reLo,reHi] x [imLo,imHi], by adaptive phase tracking.
struct WindingTracker {
  const VelocityProfile* p;
  const DispersionOptions* dopt;
  double minAbs = 1e300;
  double totalArg = 0.0;
  int evals = 0;

  Complex g(Complex z) {
    ++evals;
    return evalF(*p, z, *dopt) - 2.0;
  }

  // Advances from z0 (value g0) to z1, bisecting until each phase step < pi/2.
  void walk(Complex z0, Complex g0, Complex z1, Complex g1, int depth) {
    const double dphi = std::arg(g1 / g0);
    minAbs = std::min({minAbs, std::abs(g0), std::abs(g1)});
    if (std::abs(dphi) < 0.5 * kPi || depth > 40) {
      totalArg += dphi;
      return;
    }
    const Complex mid = 0.5 * (z0 + z1);
    const Complex gm = g(mid);
    walk(z0, g0, mid, gm, depth + 1);
    walk(mid, gm, z1, g1, depth + 1);
  }
};

}  // namespace

std::string verdictName(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::Stable: return "Stable";
    case StabilityVerdict::Unstable: return "Unstable";
    default: return "Undetermined";
  }
}

ExteriorPoles findExteriorPoles(const VelocityProfile& profile, const SpectrumOptions& opt) {
  const DispersionOptions& dopt = opt.dispersion;
  ExteriorPoles out;
  const double span = profile.mMax() - profile.mMin();
  const double delta = 1e-8 * span;

  // Right of the cut: F decreases from +infinity to 0.
  {
    const double a = profile.mMax() + delta;
    if (realF(profile, a, dopt) > 2.0) {
      // Localization bound puts lambda+ within distance 1 of the cut.
      double width = 1.25;
      double b = profile.mMax() + width;
      int guard = 0;
      while (realF(profile, b, dopt) > 2.0 && guard++ < 60) {
        width *= 2.0;
        b = profile.mMax() + width;
      }
      out.plus = refineExterior(profile, a, b, opt);
    } else {
      out.note += "no exterior pole right of the cut (F(M+ + delta) < 2); ";
    }
  }
  // Left of the cut (mirror).
  {
    const double a = profile.mMin() - delta;
    if (realF(profile, a, dopt) > 2.0) {
      double width = 1.25;
      double b = profile.mMin() - width;
      int guard = 0;
      while (realF(profile, b, dopt) > 2.0 && guard++ < 60) {
        width *= 2.0;
        b = profile.mMin() - width;
      }
      PolePair pole = refineExterior(profile, b, a, opt);
      out.minus = pole;
    } else {
      out.note += "no exterior pole left of the cut (F(M- - delta) < 2); ";
    }
  }
  return out;
}

InteriorPoleResult findInteriorPoles(const VelocityProfile& profile,
                                     const SpectrumOptions& opt) {
  if (!profile.isPiecewiseLinear())
    throw UnsupportedClassError("findInteriorPoles: piecewise-linear profiles only");
  const auto& segs = profile.segments();
  const std::vector<double> nodes = profile.nodeValues();
  const int nNodes = static_cast<int>(nodes.size());

  // Clear denominators of F - 2 over prod_j (v_j - lambda).
  std::vector<double> poly(nNodes + 2, 0.0);
  for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
    const double c = 1.0 / segs[i].alpha;
    const std::vector<double> p0 = productExcept(nodes, i);
    const std::vector<double> p1 = productExcept(nodes, i + 1);
    for (std::size_t k = 0; k < p0.size(); ++k) poly[k] += c * (p0[k] - p1[k]);
  }
  std::vector<double> full{1.0};
  for (double v : nodes) multiplyLinear(full, v);
  for (std::size_t k = 0; k < full.size(); ++k) poly[k] -= 2.0 * full[k];
  while (poly.size() > 1 && poly.back() == 0.0) poly.pop_back();

  InteriorPoleResult out;
  std::vector<Complex> roots = polynomialRoots(poly);
  out.clearedDegree = static_cast<int>(roots.size());

  const DispersionOptions& dopt = opt.dispersion;
  for (Complex r : roots) {
    if (std::abs(r.imag()) <= opt.realRootImagTol * (1.0 + std::abs(r))) {
      double x = r.real();
      // Newton polish on the rational F - 2.
      for (int it = 0; it < 30; ++it) {
        const double g = realF(profile, x, dopt) - 2.0;
        const double gp = evalFPrime(profile, Complex{x, 0.0}, dopt).real();
        if (gp == 0.0) break;
        const double step = g / gp;
        x -= step;
        if (std::abs(step) < opt.rootTol * (1.0 + std::abs(x))) break;
      }
      for (double v : nodes)
        if (std::abs(x - v) < 1e-9 * (1.0 + std::abs(v)))
          throw AtPoleError("findInteriorPoles: root collides with a node value");
      if (x > profile.mMin() && x < profile.mMax()) {
        const double fp = evalFPrime(profile, Complex{x, 0.0}, dopt).real();
        out.interior.push_back(PolePair{x, -1.0 / fp});
      } else {
        out.exteriorRoots.push_back(x);
      }
    } else {
      out.complexRoots.push_back(r);
    }
  }
  std::sort(out.interior.begin(), out.interior.end(),
            [](const PolePair& a, const PolePair& b) { return a.lambda < b.lambda; });
  for (std::size_t i = 0; i + 1 < out.interior.size(); ++i)
    if (out.interior[i + 1].lambda - out.interior[i].lambda <
        1e-9 * (1.0 + std::abs(out.interior[i].lambda)))
      throw AtPoleError("findInteriorPoles: multiple interior root (simplicity violated)");
  return out;
}

StabilityRegion defaultRegion(const VelocityProfile& profile, double pad) {
  return StabilityRegion{profile.mMin() - pad, profile.mMax() + pad, -pad, pad};
}

CertifyResult certifyStability(const VelocityProfile& profile, const StabilityRegion& region,
                               const SpectrumOptions& opt) {
  CertifyResult out;
  out.region = region;

  if (profile.isPiecewiseLinear()) {
    InteriorPoleResult poles = findInteriorPoles(profile, opt);
    out.complexRoots = poles.complexRoots;
    out.verdict = poles.complexRoots.empty() ? StabilityVerdict::Stable
                                             : StabilityVerdict::Unstable;
    out.diagnostics = "verdict from the cleared-polynomial roots";
    return out;
  }

  const DispersionOptions& dopt = opt.dispersion;
  const double cutoff = opt.windingImagCutoff;
  double shift = 0.0;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const double reLo = region.reLo - shift, reHi = region.reHi + shift;
    const double imLo = cutoff, imHi = region.imHi + shift;
    WindingTracker tracker{&profile, &dopt};
    const Complex corners[5] = {{reLo, imLo}, {reHi, imLo}, {reHi, imHi},
                                {reLo, imHi}, {reLo, imLo}};
    Complex zPrev = corners[0];
    Complex gPrev = tracker.g(zPrev);
    bool tooClose = false;
    for (int e = 0; e < 4 && !tooClose; ++e) {
      const int samples = 48;
      for (int s = 1; s <= samples; ++s) {
        const Complex z = corners[e] + (corners[e + 1] - corners[e]) *
                                           (static_cast<double>(s) / samples);
        const Complex gz = tracker.g(z);
        tracker.walk(zPrev, gPrev, z, gz, 0);
        zPrev = z;
        gPrev = gz;
        if (tracker.minAbs < 1e-10) {
          tooClose = true;
          break;
        }
      }
    }
    const double winding = tracker.totalArg / (2.0 * kPi);
    const int count = static_cast<int>(std::lround(winding));
    if (!tooClose && std::abs(winding - count) <= 0.25) {
      out.windingUpperHalf = count;
      out.verdict = count == 0 ? StabilityVerdict::Stable : StabilityVerdict::Unstable;
      std::ostringstream os;
      os << "argument-principle winding over [" << reLo << ", " << reHi << "] x ["
         << imLo << ", " << imHi << "]i (lower half mirrors by conjugation); roots "
         << "closer to the real axis than " << cutoff << " are outside the certificate";
      out.diagnostics = os.str();
      if (count > 0) {
        // Localize roots by box subdivision + complex Newton polish.
        struct Box {
          double a, b, c, d;
        };
        std::vector<Box> work{{reLo, reHi, imLo, imHi}};
        int guard = 0;
        while (!work.empty() && guard++ < 400 &&
               static_cast<int>(out.complexRoots.size()) < count) {
          Box bx = work.back();
          work.pop_back();
          if (bx.b - bx.a < 1e-5 && bx.d - bx.c < 1e-5) {
            Complex z{0.5 * (bx.a + bx.b), 0.5 * (bx.c + bx.d)};
            for (int it = 0; it < 60; ++it) {
              const Complex g = evalF(profile, z, dopt) - 2.0;
              const Complex gp = evalFPrime(profile, z, dopt);
              if (std::abs(gp) == 0.0) break;
              const Complex step = g / gp;
              z -= step;
              if (std::abs(step) < 1e-12 * (1.0 + std::abs(z))) break;
            }
            out.complexRoots.push_back(z);
            out.complexRoots.push_back(std::conj(z));
            continue;
          }
          // Split the longer side, keep halves with nonzero winding.
          for (int half = 0; half < 2; ++half) {
            Box nb = bx;
            if (bx.b - bx.a >= bx.d - bx.c) {
              const double mid = 0.5 * (bx.a + bx.b);
              (half == 0 ? nb.b : nb.a) = mid;
            } else {
              const double mid = 0.5 * (bx.c + bx.d);
              (half == 0 ? nb.d : nb.c) = mid;
            }
            WindingTracker sub{&profile, &dopt};
            const Complex cs[5] = {{nb.a, nb.c}, {nb.b, nb.c}, {nb.b, nb.d},
                                   {nb.a, nb.d}, {nb.a, nb.c}};
            Complex zp = cs[0], gp = sub.g(zp);
            for (int e = 0; e < 4; ++e)
              for (int s = 1; s <= 16; ++s) {
                const Complex z = cs[e] + (cs[e + 1] - cs[e]) * (s / 16.0);
                const Complex gz = sub.g(z);
                sub.walk(zp, gp, z, gz, 0);
                zp = z;
                gp = gz;
              }
            if (std::lround(sub.totalArg / (2.0 * kPi)) != 0) work.push_back(nb);
          }
        }
      }
      return out;
    }
    shift += 0.03 * (region.reHi - region.reLo);
  }
  out.verdict = StabilityVerdict::Undetermined;
  out.diagnostics =
      "winding integral did not settle to an integer (root near the contour?); "
      "retry with a larger region or a different imaginary cutoff";
  return out;
}

CertifyResult certifyStability(const VelocityProfile& profile, const SpectrumOptions& opt) {
  return certifyStability(profile, defaultRegion(profile, opt.regionPad), opt);
}

Spectrum analyzeSpectrum(const VelocityProfile& profile, const SpectrumOptions& opt) {
  Spectrum s;
  s.region = defaultRegion(profile, opt.regionPad);
  s.imagTol = profile.isPiecewiseLinear() ? opt.realRootImagTol : opt.windingImagCutoff;

  ExteriorPoles ext = findExteriorPoles(profile, opt);
  s.minus = ext.minus;
  s.plus = ext.plus;
  s.diagnostics = ext.note;

  CertifyResult cert = certifyStability(profile, s.region, opt);
  s.verdict = cert.verdict;
  s.complexRoots = cert.complexRoots;
  if (!cert.diagnostics.empty()) {
    if (!s.diagnostics.empty()) s.diagnostics += "; ";
    s.diagnostics += cert.diagnostics;
  }
  if (profile.isPiecewiseLinear()) {
    InteriorPoleResult ip = findInteriorPoles(profile, opt);
    s.interior = ip.interior;
  }
  return s;
}

}  // namespace ductwave
