#pragma once

#include <utility>

#include "rmhd/eos.hpp"
#include "rmhd/state.hpp"

namespace rmhd {

/// Everything derived from one primitive state: Lorentz factor, 4-velocity
/// spatial part u = Gamma v, comoving magnetic 4-vector (b0, b), its invariant
/// magnitude B^2 = |b|^2 - b0^2, total pressure q = p + B^2/2 and the thermo
/// quantities shared with the matrix assembly.
struct Kinematics {
  double gamma_lorentz = 1.0;
  Vec3 u = Vec3::Zero();
  double b0 = 0.0;
  Vec3 b = Vec3::Zero();
  double B2 = 0.0;
  double q = 0.0;
  double h = 1.0;
  double rho = 1.0;
};

/// (Gamma, u) from a 3-velocity; throws std::domain_error when |v| >= 1.
std::pair<double, Vec3> lorentz_extend(const Vec3& v);

/// Exact inverse of lorentz_extend: v = u / sqrt(1 + |u|^2).
Vec3 velocity_from_u(const Vec3& u);

struct MagneticFour {
  double b0;  ///< b^0 = (u . H)
  Vec3 b;     ///< b^i = H_i / Gamma + (u . H) v_i
  double B2;  ///< |b|^2 - b0^2, equals |H|^2/Gamma^2 + (v.H)^2
};
MagneticFour magnetic_four(const Vec3& v, const Vec3& H);

Kinematics full_kinematics(const ThermoParams& par, const PrimitiveState& state);

}  // namespace rmhd
