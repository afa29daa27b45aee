#include "rmhd/symmetrizer.hpp"

#include <stdexcept>

#include "rmhd/detail/assembly.hpp"

namespace rmhd {

using detail::KinT;
using detail::M8;
using detail::V3;

namespace {

Mat8 to_eigen(const M8<double>& m) {
  Mat8 out;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) out(i, j) = m(i, j);
  return out;
}

V3<double> to_arr(const Vec3& v) { return {v[0], v[1], v[2]}; }

struct Prepared {
  ThermoEval te;
  KinT<double> k;
  V3<double> H;
};

Prepared prepare(const ThermoParams& par, const PrimitiveState& state) {
  require_admissible(par, state);
  Prepared p;
  p.te = thermo_eval<double>(par, state.p, state.S);
  auto [gamma, u] = lorentz_extend(state.v);
  p.k = detail::kin_from_u<double>(to_arr(u), to_arr(state.H));
  p.H = to_arr(state.H);
  return p;
}

}  // namespace

Mat6 planar(const Mat8& M) {
  Mat6 out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out(i, j) = M(kPlanarIdx[i], kPlanarIdx[j]);
  return out;
}

MatrixSet assemble(const ThermoParams& par, const PrimitiveState& state) {
  const Prepared p = prepare(par, state);
  MatrixSet ms;
  ms.A0 = to_eigen(detail::assemble_A0(p.te, p.k, p.H));
  for (int j = 0; j < 3; ++j)
    ms.A[j] = to_eigen(detail::assemble_Aj(p.te, p.k, p.H, j));
  return ms;
}

MatrixSet assemble_raw(const ThermoEval& te, const Vec3& v, const Vec3& H) {
  if (!(v.norm() < 1.0))
    throw std::domain_error("assemble_raw: |v| >= 1");
  const double gamma = 1.0 / std::sqrt(1.0 - v.squaredNorm());
  const auto k = detail::kin_from_u<double>(to_arr(gamma * v), to_arr(H));
  MatrixSet ms;
  ms.A0 = to_eigen(detail::assemble_A0(te, k, to_arr(H)));
  for (int j = 0; j < 3; ++j)
    ms.A[j] = to_eigen(detail::assemble_Aj(te, k, to_arr(H), j));
  return ms;
}

Mat8 flux_part(const ThermoParams& par, const PrimitiveState& state, int j) {
  if (j < 1 || j > 3) throw std::invalid_argument("flux_part: j in 1..3");
  const Prepared p = prepare(par, state);
  return to_eigen(detail::assemble_Gj(p.k, p.H, j - 1));
}

Mat8 boundary_flux(const ThermoParams& par, const PrimitiveState& state,
                   double d2phi) {
  const Prepared p = prepare(par, state);
  const Mat8 G1 = to_eigen(detail::assemble_Gj(p.k, p.H, 0));
  const Mat8 G2 = to_eigen(detail::assemble_Gj(p.k, p.H, 1));
  return G1 - d2phi * G2;
}

FluxMatrices flux_matrices(const ThermoParams& par, const PrimitiveState& state,
                           double d2phi) {
  const Prepared p = prepare(par, state);
  FluxMatrices fm;
  for (int j = 0; j < 3; ++j)
    fm.G[j] = to_eigen(detail::assemble_Gj(p.k, p.H, j));
  fm.GN = fm.G[0] - d2phi * fm.G[1];
  fm.N = Vec2(1.0, -d2phi);
  return fm;
}

Mat8 straightened_A1(const ThermoParams& par, const PrimitiveState& state,
                     double psi_t, double psi_2, double d1Phi) {
  if (!(std::abs(d1Phi) >= 0.5))
    throw std::domain_error(
        "straightened_A1: |d1Phi| < 1/2 violates the straightening bound");
  const MatrixSet ms = assemble(par, state);
  return (ms.A[0] - psi_t * ms.A0 - psi_2 * ms.A[1]) / d1Phi;
}

}  // namespace rmhd
