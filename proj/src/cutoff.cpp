#include "rmhd/cutoff.hpp"

#include <cmath>

namespace rmhd {

namespace {

// t in [0,1] -> [0,1], quintic smoothstep; max slope 15/8 at t = 1/2.
double smoothstep5(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }
double smoothstep5_deriv(double t) {
  const double w = t * (1.0 - t);
  return 30.0 * w * w;
}

// C^inf transition (1 + tanh(k g))/2 with g(t) = (2t-1)/(t(1-t)); every
// derivative vanishes at the endpoints. k = 1/4 keeps the peak slope near 1,
// well under the 15/8 budget that the 1/2 bound on chi' translates to.
constexpr double kTanhGain = 0.25;

double bump_frac(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double g = (2.0 * t - 1.0) / (t * (1.0 - t));
  return 0.5 * (1.0 + std::tanh(kTanhGain * g));
}
double bump_frac_deriv(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double w = t * (1.0 - t);
  const double g = (2.0 * t - 1.0) / w;
  const double gp = (2.0 * w + (2.0 * t - 1.0) * (2.0 * t - 1.0)) / (w * w);
  const double c = std::cosh(kTanhGain * g);
  return 0.5 * kTanhGain * gp / (c * c);
}

}  // namespace

double cutoff(double s, CutoffKind kind) {
  const double x = std::abs(s);
  if (x <= kCutoffPlateau) return 1.0;
  if (x >= kCutoffSupport) return 0.0;
  const double t = (x - kCutoffPlateau) / (kCutoffSupport - kCutoffPlateau);
  return kind == CutoffKind::Quintic ? 1.0 - smoothstep5(t) : 1.0 - bump_frac(t);
}

double cutoff_deriv(double s, CutoffKind kind) {
  const double x = std::abs(s);
  if (x <= kCutoffPlateau || x >= kCutoffSupport) return 0.0;
  const double w = 1.0 / (kCutoffSupport - kCutoffPlateau);
  const double t = (x - kCutoffPlateau) * w;
  const double d =
      kind == CutoffKind::Quintic ? -smoothstep5_deriv(t) * w : -bump_frac_deriv(t) * w;
  return s > 0.0 ? d : -d;
}

}  // namespace rmhd
