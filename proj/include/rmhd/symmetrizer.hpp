#pragma once

#include <array>

#include <Eigen/Core>

#include "rmhd/eos.hpp"
#include "rmhd/kinematics.hpp"
#include "rmhd/state.hpp"

namespace rmhd {

using Mat8 = Eigen::Matrix<double, 8, 8>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Row/column indices surviving the planar 2-D reduction (v3 = H3 = 0):
/// ordering (p, u1, u2, H1, H2, S).
inline constexpr std::array<int, 6> kPlanarIdx = {0, 1, 2, 4, 5, 7};

/// Extract the 6x6 planar principal submatrix of an 8x8 assembly.
Mat6 planar(const Mat8& M);

/// The symmetric coefficient matrices A0, A1..A3 of the symmetrized system
/// for one state, with named accessors for the individual blocks.
struct MatrixSet {
  Mat8 A0;
  std::array<Mat8, 3> A;  // A[j-1] = A_j

  const Mat8& Aj(int j) const { return A.at(j - 1); }
  Eigen::Block<const Mat8, 3, 3> acal() const { return A0.block<3, 3>(1, 1); }
  Eigen::Block<const Mat8, 3, 3> mcal() const { return A0.block<3, 3>(4, 4); }
  Eigen::Block<const Mat8, 3, 3> acal_j(int j) const { return Aj(j).block<3, 3>(1, 1); }
  Eigen::Block<const Mat8, 3, 3> ncal_j(int j) const { return Aj(j).block<3, 3>(4, 1); }
};

/// Flux parts of the decomposition A_j = v_j A_0 + G_j, plus the boundary
/// matrix G_N = G_1 - G_2 * d2phi for the co-normal N = (1, -d2phi).
struct FluxMatrices {
  std::array<Mat8, 3> G;
  Mat8 GN;
  Vec2 N;

  const Mat8& Gj(int j) const { return G.at(j - 1); }
  Eigen::Block<const Mat8, 3, 3> gcal_j(int j) const { return Gj(j).block<3, 3>(1, 1); }
  Eigen::Block<const Mat8, 3, 3> ncal_N() const { return GN.block<3, 3>(4, 1); }
  Eigen::Block<const Mat8, 3, 3> gcal_N() const { return GN.block<3, 3>(1, 1); }
};

/// Assemble A0..A3 at an admissible state (throws std::domain_error otherwise).
MatrixSet assemble(const ThermoParams& par, const PrimitiveState& state);

/// Assembly from raw thermo values, bypassing the EOS and admissibility gate.
/// Intended for probing the hyperbolicity boundary (e.g. p_rho < 0 families
/// where A0 must lose positive definiteness).
MatrixSet assemble_raw(const ThermoEval& te, const Vec3& v, const Vec3& H);

/// G_j assembled from its closed-form blocks (independent of assemble()).
Mat8 flux_part(const ThermoParams& par, const PrimitiveState& state, int j);

/// G_N = G_1 - G_2 * d2phi.
Mat8 boundary_flux(const ThermoParams& par, const PrimitiveState& state, double d2phi);

/// All flux parts at once.
FluxMatrices flux_matrices(const ThermoParams& par, const PrimitiveState& state,
                           double d2phi);

/// Straightened coefficient matrix
///   (A_1 - A_0 psi_t - A_2 psi_2) / d1Phi,
/// requiring |d1Phi| >= 1/2 as guaranteed by the interface change of
/// variables; throws std::domain_error below that bound.
Mat8 straightened_A1(const ThermoParams& par, const PrimitiveState& state,
                     double psi_t, double psi_2, double d1Phi);

}  // namespace rmhd
