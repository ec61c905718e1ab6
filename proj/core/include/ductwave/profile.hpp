#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ductwave {

/// Inverse-function calculus of a profile at a velocity value z = M(y):
/// y = mu(z) and its first three derivatives.
struct InverseCalculus {
  double mu;
  double mu1;
  double mu2;
  double mu3;
};

/// One straight piece of a piecewise-linear profile: M(y) = alpha y + beta
/// on [x0, x1], with end values m0 = M(x0), m1 = M(x1).
struct PlSegment {
  double x0, x1;
  double m0, m1;
  double alpha, beta;
};

enum class ProfileClass { SmoothMonotoneConvex, PiecewiseLinear };

struct ProfileValidation {
  bool ok = false;
  ProfileClass classTag = ProfileClass::SmoothMonotoneConvex;
  bool increasing = true;
  double mMin = 0.0, mMax = 0.0;
  std::vector<std::string> violations;  // empty when ok
  std::vector<std::string> warnings;    // e.g. merged degenerate PL segments
};

/// Transverse velocity profile M(y) on y in [-1, 1].
///
/// Two admissible classes: smooth strictly monotone profiles with fixed
/// convexity (supplied as evaluator bundles for M and three derivatives,
/// optionally with a closed-form inverse), and continuous strictly monotone
/// piecewise-linear profiles.
class VelocityProfile {
 public:
  using Evaluator = std::function<double(double)>;

  struct InverseBundle {
    Evaluator mu, mu1, mu2, mu3;
  };

  /// M(y) = exp(a y + b), a != 0. Closed-form inverse.
  static VelocityProfile exponential(double a, double b);

  /// M(y) = (y + c)^2 with c > 1. Closed-form inverse.
  static VelocityProfile quadratic(double c);

  /// Smooth profile from an evaluator bundle; inverse optional (bisection
  /// plus chain rules otherwise).
  static VelocityProfile smoothFromEvaluators(Evaluator m, Evaluator m1, Evaluator m2,
                                              Evaluator m3,
                                              std::optional<InverseBundle> inverse = {});

  /// Continuous piecewise-linear profile through (breakpoints[i], values[i]).
  /// Consecutive segments with equal slope are merged (warning recorded).
  static VelocityProfile piecewiseLinear(std::vector<double> breakpoints,
                                         std::vector<double> values);

  bool isPiecewiseLinear() const { return pl_.has_value(); }
  double mMin() const { return mMin_; }
  double mMax() const { return mMax_; }
  bool increasing() const { return increasing_; }
  /// +1 for increasing profiles, -1 for decreasing.
  double orientation() const { return increasing_ ? 1.0 : -1.0; }

  /// M(y); y must lie in [-1, 1].
  double evaluate(double y) const;
  /// M'(y) (slope of the active segment in the PL case).
  double derivative(double y) const;

  /// Inverse calculus at z in [M-, M+]. Smooth profiles only; the PL class
  /// raises UnsupportedClassError (use segmentInverse()).
  InverseCalculus inverseAt(double z) const;

  /// Segment-local affine inversion for PL profiles: y with M(y) = z and
  /// mu' = 1/alpha of the active segment.
  InverseCalculus segmentInverse(double z) const;

  /// Class membership report; smooth checks sample >= minSamples points.
  ProfileValidation validate(int minSamples = 1024) const;
  /// Throws UnsupportedClassError when the profile fails validate().
  void requireValid() const;

  const std::vector<PlSegment>& segments() const;
  /// Node velocity values M_{-N}..M_N (PL only).
  std::vector<double> nodeValues() const;

 private:
  VelocityProfile() = default;

  struct Smooth {
    Evaluator m, m1, m2, m3;
    std::optional<InverseBundle> inverse;
  };

  std::optional<Smooth> smooth_;
  std::optional<std::vector<PlSegment>> pl_;
  double mMin_ = 0.0, mMax_ = 0.0;
  bool increasing_ = true;
  std::vector<std::string> constructionWarnings_;
  mutable std::shared_ptr<const ProfileValidation> validation_;  // lazy cache

  const PlSegment& segmentFor(double y) const;
  const PlSegment& segmentForValue(double z) const;
  void finishSetup();
};

}  // namespace ductwave
