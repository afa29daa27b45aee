#pragma once

#include <string>
#include <vector>

#include "rmhd/eos.hpp"
#include "rmhd/state.hpp"

namespace rmhd {

/// Discontinuity-front geometry at a point: unit normal, the (non-unit)
/// tangents tau1 = (d2phi, 1, 0) and tau2 = (d3phi, 0, 1), and the front speed
/// sigma = dtphi / sqrt(1 + d2phi^2 + d3phi^2).
struct FrontGeometry {
  Vec3 n = Vec3::UnitX();
  Vec3 tau1 = Vec3::UnitY();
  Vec3 tau2 = Vec3::UnitZ();
  double sigma = 0.0;
  double norm = 1.0;  ///< sqrt(1 + d2phi^2 + d3phi^2)

  static FrontGeometry from_slopes(double dtphi, double d2phi, double d3phi = 0.0);
};

/// Left-hand sides of the jump conditions (10)-(15) evaluated on a pair of
/// states, with [g] = g(right) - g(left). The single-valued quantities frak(j)
/// and H_n entering (11)-(15) are taken as the arithmetic mean of the two
/// sides (they coincide when (10)/(13) hold).
struct JumpResiduals {
  double r10 = 0.0;  ///< [frak(j)], mass flux
  double r11 = 0.0;  ///< normal momentum
  Vec2 r12 = Vec2::Zero();  ///< tangential momentum
  double r13 = 0.0;  ///< [H_n]
  Vec2 r14 = Vec2::Zero();  ///< magnetic tangential
  double r15 = 0.0;  ///< energy
  double max_abs() const;
};

enum class DiscontinuityClass {
  Contact,
  Shock,
  CurrentVortexSheet,
  Alfven,
  NotADiscontinuity,
};
const char* to_string(DiscontinuityClass c);

/// frak(j) = rho Gamma (v.n - sigma) for one state.
double mass_flux(const ThermoParams& par, const PrimitiveState& state,
                 const FrontGeometry& geom);

JumpResiduals rh_residuals(const ThermoParams& par, const PrimitiveState& left,
                           const PrimitiveState& right, const FrontGeometry& geom);

/// Taxonomy on data that satisfies (10)-(15) within tol (scale-aware):
///   frak(j) = 0, H_n != 0  -> Contact
///   frak(j) = 0, H_n  = 0  -> CurrentVortexSheet
///   frak(j) != 0, [rho] != 0 -> Shock
///   frak(j) != 0, [rho]  = 0 -> Alfven
DiscontinuityClass classify(const ThermoParams& par, const PrimitiveState& left,
                            const PrimitiveState& right, const FrontGeometry& geom,
                            double tol = 1e-9);

/// One step of the contact-reduction implication chain with its residual.
struct ReductionStep {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

/// Verifies, on the given data, the chain
///   frak(j)=0  =>  [v_n]=0  =>(14)  [v_tau]=0  =>(12),(16),|sigma|<1  [H_tau]=0
///   =>(13)  [H]=0  =>(11)  [p]=0,
/// i.e. that the pair satisfies the contact boundary conditions (17).
struct ContactReductionReport {
  std::vector<ReductionStep> steps;
  bool satisfies_contact_conditions = false;
  std::string describe() const;
};

ContactReductionReport contact_reduction_check(const ThermoParams& par,
                                               const PrimitiveState& left,
                                               const PrimitiveState& right,
                                               const FrontGeometry& geom,
                                               double tol = 1e-9);

}  // namespace rmhd
