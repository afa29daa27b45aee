#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rmhd/basic_state.hpp"

namespace rmhd {

/// Perturbation unknowns: good-unknown fields on both sides plus the front
/// perturbation phi on the boundary nodes. Components (p, u1, u2, H1, H2, S).
struct PerturbationFields {
  Field plus, minus;
  std::vector<double> phi;

  const Field& field(Side s) const { return s == Side::Plus ? plus : minus; }
  Field& field(Side s) { return s == Side::Plus ? plus : minus; }
  static PerturbationFields zero(const Grid& g);
};

/// Alinhac's good unknown: Udot = U - (Psi/d1Phi-hat) d1U-hat, applied
/// pointwise with Psi = chi(+-x1) phi(x2). d1U-hat is differenced from the
/// stored basic state.
PerturbationFields good_unknown(const BasicState& bs, const Field& Uplus,
                                const Field& Uminus, const std::vector<double>& phi);
/// Exact inverse of good_unknown (same phi).
void good_unknown_invert(const BasicState& bs, PerturbationFields& pert,
                         Field& Uplus, Field& Uminus);

/// v-dot = (u-dot - (v-hat . u-dot) v-hat) / Gamma-hat (planar).
Vec2 perturbation_velocity(const Vec2& udot, const Vec2& vhat);

/// Directional derivatives of the coefficient matrices at U (6-vector in
/// u-form, full = shifted + Ubar) along Y: (Y, grad A0), (Y, grad A1-tilde),
/// (Y, grad A2). The A1-tilde derivative is taken at fixed straightening data.
struct MatrixTriple {
  Mat6 dA0, dA1t, dA2;
};
struct StraightenPoint {
  double dtPsi = 0.0, d2Psi = 0.0, d1Phi = 1.0;
};
MatrixTriple coefficient_derivative(const ThermoParams& par, const Vector6& U_full,
                                    const StraightenPoint& sp, const Vector6& Y);

/// The lower-order matrix C(U-hat, Psi-hat) at a node: column i equals the
/// directional derivative triple contracted with the basic-state gradients,
///   C e_i = (e_i, grad A0) dtU + (e_i, grad A1-tilde) d1U + (e_i, grad A2) d2U.
Mat6 coefficient_C(const ThermoParams& par, const Vector6& U_full,
                   const StraightenPoint& sp, const Vector6& dtU, const Vector6& d1U,
                   const Vector6& d2U);

/// Planar coefficient matrices at a basic-state node (A0, A1-tilde, A2
/// evaluated at Uhat + Ubar with the straightening of the node).
struct NodeCoeffs {
  Mat6 A0, A0inv, A1t, A2, C;
};
NodeCoeffs node_coeffs(const BasicState& bs, Side s, int i, int j);

/// Effective interior operator residual L'_e(Udot) - f at every node, with the
/// grid derivatives of Udot supplied by the caller (finite-differenced or
/// analytic).
Field effective_interior_apply(const BasicState& bs, Side s, const Field& U,
                               const Field& dtU, const Field& d1U, const Field& d2U,
                               const Field* f = nullptr);

/// Centered second-order differences (one-sided at the x1 ends).
Field fd_d1(const Field& U, double h1);
Field fd_d2_periodic(const Field& U, double h2);

/// The dropped zeroth-order terms of the exact linearization:
///   -(Psi/d1Phi-hat) d1{ L(U-hat, Psi-hat) },
/// reported as a diagnostic; identically zero when the basic state solves the
/// nonlinear equations.
Field dropped_zeroth_order_terms(const BasicState& bs, Side s,
                                 const std::vector<double>& phi);

/// The five linearized boundary rows at each boundary node:
///   [p-dot] + phi [d1 p-hat],  [v1-dot],  [v2-dot],
///   [H-tau-dot] + phi [d1 H-tau-hat],
///   dtphi + v2-hat+ d2phi - vN-dot+ - phi d1 vN-hat+ .
/// The last row needs dtphi of the perturbation front; rows equal g when the
/// linearized boundary conditions hold.
Eigen::Matrix<double, 5, Eigen::Dynamic> boundary_operator_apply(
    const BasicState& bs, const PerturbationFields& pert,
    const std::vector<double>& dtphi);

/// Boundary quadratic form at one admissible contact point, by two routes:
/// the definitional contraction -1/2 (frak(A1-hat) Udot . Udot) and the closed
/// form
///   Gamma+ { (H_N+ vdot2+ - H2+ vdotN+)((1-sigma^2)[H-tau-dot]
///            + sigma-tau [H_N-dot]) - vdotN+ [p-dot] },
/// where sigma = dtphi/s, sigma-tau = v_N v_tau / s^2, s^2 = 1 + d2phi^2.
/// The closed form's [H_N-dot] coefficient is the one the contraction actually
/// produces; with [H_N-dot] = 0 both reduce to the standard (1-sigma^2) form.
struct QuadraticFormValues {
  double direct = 0.0;
  double reduced = 0.0;
};
QuadraticFormValues boundary_quadratic_form(const ThermoParams& par,
                                            const PrimitiveState& plus_full,
                                            const PrimitiveState& minus_full,
                                            double d2phi, double dtphi,
                                            const Vector6& Udot_plus,
                                            const Vector6& Udot_minus);

/// Interior and boundary sources of the linear problem. All callables must
/// vanish for t < 0. dtg is required only when lifting inhomogeneous g.
struct Sources {
  using InteriorFn = std::function<Vector6(Side, double t, double x1, double x2)>;
  using BoundaryFn = std::function<Eigen::Matrix<double, 5, 1>(double t, double x2)>;
  InteriorFn f;   ///< may be empty (zero)
  BoundaryFn g;   ///< may be empty (zero)
  BoundaryFn dtg; ///< time derivative of g, needed for lifting

  Vector6 eval_f(Side s, double t, double x1, double x2) const {
    return f ? f(s, t, x1, x2) : Vector6::Zero();
  }
  Eigen::Matrix<double, 5, 1> eval_g(double t, double x2) const {
    return g ? g(t, x2) : Eigen::Matrix<double, 5, 1>::Zero();
  }
};

/// Boundary-data lifting. The transported datum g6 solves
///   dt g6 + d2( v2-hat+ g6 ) = [f_H . N-hat]   on the boundary;
/// the lifted field U-tilde is the boundary trace built from (g, g6) extended
/// into the interior by chi(x1). The caller owns the g6 vector and advances it
/// in lockstep with its own time stepping using g6_rhs.
class LiftState {
 public:
  LiftState(const BasicState& bs, Sources sources);

  /// Transport right-hand side for g6 (centered differences + dissipation).
  std::vector<double> g6_rhs(double t, const std::vector<double>& g6) const;

  /// Boundary trace of the lifted field and its exact time derivative.
  /// The plus side carries the g5 row through v_N+; the minus side carries
  /// the remaining jumps, including [H_N-tilde] = g6.
  Vector6 boundary_trace(Side s, int j, double t,
                         const std::vector<double>& g6) const;
  Vector6 dt_boundary_trace(Side s, int j, double t,
                            const std::vector<double>& g6) const;

  /// Lifted field value / time derivative at a node: trace times chi(x1).
  Vector6 value(Side s, int i, int j, double t,
                const std::vector<double>& g6) const;
  Vector6 time_derivative(Side s, int i, int j, double t,
                          const std::vector<double>& g6) const;

  /// [f_H . N-hat](t, j) with f_H = Mcal-hat^{-1} (f4, f5) at the boundary.
  double fH_jump(double t, int j) const;

 private:
  const BasicState* bs_;
  Sources src_;
  std::vector<Eigen::Matrix2d> minv_plus_, minv_minus_;  // Mcal^{-1} at x1=0
};

}  // namespace rmhd
