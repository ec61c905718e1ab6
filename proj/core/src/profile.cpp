#include "ductwave/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ductwave/errors.hpp"

namespace ductwave {

namespace {

std::string formatViolation(const char* what, double y, double value) {
  std::ostringstream os;
  os << what << " at y = " << y << " (value " << value << ")";
  return os.str();
}

}  // namespace

VelocityProfile VelocityProfile::exponential(double a, double b) {
  if (a == 0.0) throw DomainError("exponential profile requires a != 0");
  VelocityProfile p;
  p.smooth_ = Smooth{
      [a, b](double y) { return std::exp(a * y + b); },
      [a, b](double y) { return a * std::exp(a * y + b); },
      [a, b](double y) { return a * a * std::exp(a * y + b); },
      [a, b](double y) { return a * a * a * std::exp(a * y + b); },
      InverseBundle{
          [a, b](double z) { return (std::log(z) - b) / a; },
          [a](double z) { return 1.0 / (a * z); },
          [a](double z) { return -1.0 / (a * z * z); },
          [a](double z) { return 2.0 / (a * z * z * z); },
      }};
  p.finishSetup();
  return p;
}

VelocityProfile VelocityProfile::quadratic(double c) {
  if (!(c > 1.0)) throw DomainError("quadratic profile requires c > 1");
  VelocityProfile p;
  p.smooth_ = Smooth{
      [c](double y) { return (y + c) * (y + c); },
      [c](double y) { return 2.0 * (y + c); },
      [](double) { return 2.0; },
      [](double) { return 0.0; },
      InverseBundle{
          [c](double z) { return std::sqrt(z) - c; },
          [](double z) { return 0.5 / std::sqrt(z); },
          [](double z) { return -0.25 / std::pow(z, 1.5); },
          [](double z) { return 0.375 / std::pow(z, 2.5); },
      }};
  p.finishSetup();
  return p;
}

VelocityProfile VelocityProfile::smoothFromEvaluators(Evaluator m, Evaluator m1,
                                                      Evaluator m2, Evaluator m3,
                                                      std::optional<InverseBundle> inverse) {
  VelocityProfile p;
  p.smooth_ = Smooth{std::move(m), std::move(m1), std::move(m2), std::move(m3),
                     std::move(inverse)};
  p.finishSetup();
  return p;
}

VelocityProfile VelocityProfile::piecewiseLinear(std::vector<double> breakpoints,
                                                 std::vector<double> values) {
  if (breakpoints.size() != values.size())
    throw DomainError("piecewiseLinear: breakpoints/values size mismatch");
  if (breakpoints.size() < 2)
    throw DomainError("piecewiseLinear: need at least two breakpoints");
  if (std::abs(breakpoints.front() + 1.0) > 1e-12 ||
      std::abs(breakpoints.back() - 1.0) > 1e-12)
    throw DomainError("piecewiseLinear: breakpoints must span [-1, 1]");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i + 1] > breakpoints[i]))
      throw DomainError("piecewiseLinear: breakpoints must be strictly increasing");

  VelocityProfile p;
  std::vector<PlSegment> segs;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    PlSegment s;
    s.x0 = breakpoints[i];
    s.x1 = breakpoints[i + 1];
    s.m0 = values[i];
    s.m1 = values[i + 1];
    s.alpha = (s.m1 - s.m0) / (s.x1 - s.x0);
    s.beta = s.m0 - s.alpha * s.x0;
    segs.push_back(s);
  }
  // Merge consecutive segments with equal slope; the shared node carries no
  // slope jump and drops out of every downstream formula.
  std::vector<PlSegment> merged;
  for (const PlSegment& s : segs) {
    if (!merged.empty() && std::abs(merged.back().alpha - s.alpha) <
                               1e-12 * (std::abs(s.alpha) + 1.0)) {
      merged.back().x1 = s.x1;
      merged.back().m1 = s.m1;
      std::ostringstream os;
      os << "merged degenerate segment ending at x = " << s.x1
         << " (equal consecutive slopes)";
      p.constructionWarnings_.push_back(os.str());
    } else {
      merged.push_back(s);
    }
  }
  p.pl_ = std::move(merged);
  p.finishSetup();
  return p;
}

void VelocityProfile::finishSetup() {
  const double mA = evaluate(-1.0), mB = evaluate(1.0);
  increasing_ = mB > mA;
  mMin_ = std::min(mA, mB);
  mMax_ = std::max(mA, mB);
}

double VelocityProfile::evaluate(double y) const {
  if (y < -1.0 - 1e-14 || y > 1.0 + 1e-14)
    throw DomainError("evaluate: y outside [-1, 1]");
  y = std::clamp(y, -1.0, 1.0);
  if (pl_) {
    const PlSegment& s = segmentFor(y);
    return s.alpha * y + s.beta;
  }
  return smooth_->m(y);
}

double VelocityProfile::derivative(double y) const {
  if (y < -1.0 - 1e-14 || y > 1.0 + 1e-14)
    throw DomainError("derivative: y outside [-1, 1]");
  y = std::clamp(y, -1.0, 1.0);
  if (pl_) return segmentFor(y).alpha;
  return smooth_->m1(y);
}

const PlSegment& VelocityProfile::segmentFor(double y) const {
  const auto& segs = *pl_;
  // Binary search for the segment containing y.
  std::size_t lo = 0, hi = segs.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (y <= segs[mid].x1)
      hi = mid;
    else
      lo = mid + 1;
  }
  return segs[lo];
}

const PlSegment& VelocityProfile::segmentForValue(double z) const {
  const auto& segs = *pl_;
  std::size_t lo = 0, hi = segs.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const double top = increasing_ ? segs[mid].m1 : segs[mid].m0;
    const bool inLower = increasing_ ? (z <= top) : (z >= top);
    if (inLower)
      hi = mid;
    else
      lo = mid + 1;
  }
  return segs[lo];
}

InverseCalculus VelocityProfile::inverseAt(double z) const {
  if (pl_)
    throw UnsupportedClassError(
        "inverseAt: piecewise-linear profiles use segmentInverse()");
  if (z < mMin_ - 1e-12 || z > mMax_ + 1e-12)
    throw DomainError("inverseAt: z outside [M-, M+]");
  z = std::clamp(z, mMin_, mMax_);

  double y;
  if (smooth_->inverse) {
    y = smooth_->inverse->mu(z);
    return InverseCalculus{y, smooth_->inverse->mu1(z), smooth_->inverse->mu2(z),
                           smooth_->inverse->mu3(z)};
  }
  // Bisection on M(y) = z (to the last representable midpoint), then chain rules.
  double lo = -1.0, hi = 1.0;
  const bool inc = increasing_;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const bool below = inc ? (smooth_->m(mid) < z) : (smooth_->m(mid) > z);
    (below ? lo : hi) = mid;
  }
  y = 0.5 * (lo + hi);
  const double m1 = smooth_->m1(y), m2 = smooth_->m2(y), m3 = smooth_->m3(y);
  const double mu1 = 1.0 / m1;
  const double mu2 = -m2 / (m1 * m1 * m1);
  const double mu3 = (3.0 * m2 * m2 - m1 * m3) / std::pow(m1, 5);
  return InverseCalculus{y, mu1, mu2, mu3};
}

InverseCalculus VelocityProfile::segmentInverse(double z) const {
  if (!pl_) throw UnsupportedClassError("segmentInverse: smooth profiles use inverseAt()");
  if (z < mMin_ - 1e-12 || z > mMax_ + 1e-12)
    throw DomainError("segmentInverse: z outside [M-, M+]");
  z = std::clamp(z, mMin_, mMax_);
  const PlSegment& s = segmentForValue(z);
  return InverseCalculus{(z - s.beta) / s.alpha, 1.0 / s.alpha, 0.0, 0.0};
}

ProfileValidation VelocityProfile::validate(int minSamples) const {
  ProfileValidation rep;
  rep.warnings = constructionWarnings_;

  if (pl_) {
    rep.classTag = ProfileClass::PiecewiseLinear;
    const auto& segs = *pl_;
    rep.increasing = segs.front().alpha > 0.0;
    bool monotone = true;
    for (const PlSegment& s : segs) {
      if ((rep.increasing && s.alpha <= 0.0) || (!rep.increasing && s.alpha >= 0.0)) {
        monotone = false;
        rep.violations.push_back(formatViolation("non-monotone segment slope", s.x0, s.alpha));
      }
    }
    rep.mMin = mMin_;
    rep.mMax = mMax_;
    rep.ok = monotone;
    return rep;
  }

  rep.classTag = ProfileClass::SmoothMonotoneConvex;
  const int n = std::max(minSamples, 2) + 1;
  double m1Sign = 0.0, m2Sign = 0.0;
  bool ok = true;
  for (int i = 0; i < n && ok; ++i) {
    const double y = -1.0 + 2.0 * i / (n - 1);
    const double d1 = smooth_->m1(y);
    const double d2 = smooth_->m2(y);
    if (d1 == 0.0 || (m1Sign != 0.0 && d1 * m1Sign < 0.0)) {
      rep.violations.push_back(formatViolation("M' vanishes or changes sign", y, d1));
      ok = false;
      break;
    }
    if (d2 == 0.0 || (m2Sign != 0.0 && d2 * m2Sign < 0.0)) {
      rep.violations.push_back(formatViolation("M'' vanishes or changes sign", y, d2));
      ok = false;
      break;
    }
    m1Sign = d1 > 0.0 ? 1.0 : -1.0;
    m2Sign = d2 > 0.0 ? 1.0 : -1.0;
  }
  rep.increasing = increasing_;
  rep.mMin = mMin_;
  rep.mMax = mMax_;
  rep.ok = ok;
  return rep;
}

void VelocityProfile::requireValid() const {
  if (!validation_) validation_ = std::make_shared<const ProfileValidation>(validate());
  if (!validation_->ok) {
    std::string msg = "profile outside the admissible classes";
    if (!validation_->violations.empty()) msg += ": " + validation_->violations.front();
    throw UnsupportedClassError(msg);
  }
}

const std::vector<PlSegment>& VelocityProfile::segments() const {
  if (!pl_) throw UnsupportedClassError("segments: not a piecewise-linear profile");
  return *pl_;
}

std::vector<double> VelocityProfile::nodeValues() const {
  const auto& segs = segments();
  std::vector<double> nodes;
  nodes.reserve(segs.size() + 1);
  for (const PlSegment& s : segs) nodes.push_back(s.m0);
  nodes.push_back(segs.back().m1);
  return nodes;
}

}  // namespace ductwave
