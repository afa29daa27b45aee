#pragma once

namespace rmhd {

/// Interface cut-off: 1 on [-1,1], 0 outside [-5,5], monotone in between with
/// max |chi'| = 15/32 < 1/2, which is what keeps the straightening invertible
/// (d1Phi+ >= 1/2) for any front with |phi| <= 1.
enum class CutoffKind {
  Quintic,    ///< C^2 quintic-smoothstep transition (default)
  SmoothExp,  ///< C-infinity exp-based transition, for convergence studies
};

double cutoff(double s, CutoffKind kind = CutoffKind::Quintic);
double cutoff_deriv(double s, CutoffKind kind = CutoffKind::Quintic);

inline constexpr double kCutoffPlateau = 1.0;
inline constexpr double kCutoffSupport = 5.0;
inline constexpr double kCutoffMaxSlope = 15.0 / 32.0;

}  // namespace rmhd
