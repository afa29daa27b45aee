#include "rmhd/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace rmhd {

std::pair<double, Vec3> lorentz_extend(const Vec3& v) {
  const double v2 = v.squaredNorm();
  if (!(v2 < 1.0))
    throw std::domain_error("lorentz_extend: |v| >= 1 (light-speed violation)");
  const double gamma = 1.0 / std::sqrt(1.0 - v2);
  return {gamma, gamma * v};
}

Vec3 velocity_from_u(const Vec3& u) { return u / std::sqrt(1.0 + u.squaredNorm()); }

MagneticFour magnetic_four(const Vec3& v, const Vec3& H) {
  auto [gamma, u] = lorentz_extend(v);
  MagneticFour m;
  m.b0 = u.dot(H);
  m.b = H / gamma + m.b0 * v;
  m.B2 = m.b.squaredNorm() - m.b0 * m.b0;
  return m;
}

Kinematics full_kinematics(const ThermoParams& par, const PrimitiveState& state) {
  require_admissible(par, state);
  Kinematics k;
  std::tie(k.gamma_lorentz, k.u) = lorentz_extend(state.v);
  const MagneticFour m = magnetic_four(state.v, state.H);
  k.b0 = m.b0;
  k.b = m.b;
  k.B2 = m.B2;
  k.q = state.p + 0.5 * m.B2;
  k.rho = density_from_p_S(par, state.p, state.S);
  k.h = enthalpy(par, state.p, k.rho);
  return k;
}

}  // namespace rmhd
