#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ductwave/dispersion.hpp"
#include "ductwave/profile.hpp"
#include "ductwave/types.hpp"

namespace ductwave {

struct PolePair {
  double lambda = 0.0;
  double residue = 0.0;  // residue of N, -1/F'(lambda)
};

/// Rectangle in the complex plane, symmetric about the real axis.
struct StabilityRegion {
  double reLo, reHi, imLo, imHi;
};

enum class StabilityVerdict { Stable, Unstable, Undetermined };

std::string verdictName(StabilityVerdict v);

struct Spectrum {
  std::optional<PolePair> minus;  // pole in (-inf, M-)
  std::optional<PolePair> plus;   // pole in (M+, inf)
  std::vector<PolePair> interior;  // piecewise-linear case only
  StabilityVerdict verdict = StabilityVerdict::Undetermined;
  std::vector<Complex> complexRoots;
  StabilityRegion region{0, 0, 0, 0};
  double imagTol = 1e-9;
  std::string diagnostics;

  bool stable() const { return verdict == StabilityVerdict::Stable; }
};

struct SpectrumOptions {
  DispersionOptions dispersion{};
  double realRootImagTol = 1e-9;   // |Im| <= tol*(1+|lambda|) counts as real
  double windingImagCutoff = 1e-3; // contour keeps this distance from the real axis
  double rootTol = 1e-12;
  /// Default search region: localization bound dist(lambda, cut) <= 1
  /// (|F| <= 2/dist^2 and F = 2 force dist <= 1), padded by 10%.
  double regionPad = 1.1;
};

/// Both exterior poles with residues. A missing pole (possible only if F
/// stays below 2 next to the cut end) is left unset and flagged in `note`.
struct ExteriorPoles {
  std::optional<PolePair> minus, plus;
  std::string note;
};
ExteriorPoles findExteriorPoles(const VelocityProfile& profile,
                                const SpectrumOptions& opt = {});

/// All roots of the cleared polynomial of F - 2 for a piecewise-linear
/// profile, classified into interior poles / exterior poles / complex roots.
struct InteriorPoleResult {
  std::vector<PolePair> interior;
  std::vector<double> exteriorRoots;
  std::vector<Complex> complexRoots;
  int clearedDegree = 0;
};
InteriorPoleResult findInteriorPoles(const VelocityProfile& profile,
                                     const SpectrumOptions& opt = {});

struct CertifyResult {
  StabilityVerdict verdict = StabilityVerdict::Undetermined;
  std::vector<Complex> complexRoots;
  int windingUpperHalf = 0;
  StabilityRegion region{0, 0, 0, 0};
  std::string diagnostics;
};
/// Counts roots of F = 2 with Im > cutoff inside `region` by the argument
/// principle (upper half; the lower half mirrors by conjugate symmetry).
/// Piecewise-linear profiles read the verdict off the polynomial roots.
CertifyResult certifyStability(const VelocityProfile& profile,
                               const StabilityRegion& region,
                               const SpectrumOptions& opt = {});
CertifyResult certifyStability(const VelocityProfile& profile,
                               const SpectrumOptions& opt = {});

StabilityRegion defaultRegion(const VelocityProfile& profile, double pad = 1.1);

/// One-stop spectrum analysis: exterior poles, interior poles (PL), verdict.
Spectrum analyzeSpectrum(const VelocityProfile& profile, const SpectrumOptions& opt = {});

}  // namespace ductwave
