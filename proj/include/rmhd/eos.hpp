#pragma once

#include <string>

#include "rmhd/dual.hpp"
#include "rmhd/state.hpp"

namespace rmhd {

/// Polytropic-gas constants together with the admissibility margins used by
/// the boundary analysis. All margins are strictly positive.
struct ThermoParams {
  double gamma = 4.0 / 3.0;  ///< adiabatic index, 1 < gamma <= 2
  double A = 1.0;            ///< rho = A p^{1/gamma} e^{-S/gamma}
  double pbar = 0.1;         ///< pressure floor (5.1), also the shift constant
  double nu = 0.05;          ///< light-speed margin (5.1'')
  double kappa = 0.1;        ///< magnetic-normal margin (mf.1)
  double epsilon = 0.1;      ///< Rayleigh-Taylor margin (RT1)

  /// For gamma > 2 the causality reduction to p > 0 no longer applies; such
  /// parameters are rejected unless this flag is set, and then every causality
  /// verdict is still reported honestly by hyperbolicity_report.
  bool allow_gamma_above_two = false;

  void validate() const;  ///< throws std::invalid_argument on bad constants
};

/// rho(p,S) = A p^{1/gamma} e^{-S/gamma}; requires p > 0.
double density_from_p_S(const ThermoParams& par, double p, double S);

/// Inverse of density_from_p_S in p at fixed S.
double pressure_from_rho_S(const ThermoParams& par, double rho, double S);

/// e = p / ((gamma-1) rho), the unique internal energy consistent with
/// a^2 = p_rho = gamma p / rho for the polytropic law.
double internal_energy(const ThermoParams& par, double p, double rho);

/// h = 1 + e + p/rho = 1 + gamma p / ((gamma-1) rho); always > 1 on the
/// admissible domain.
double enthalpy(const ThermoParams& par, double p, double rho);

/// c_s^2 = a^2 / h with a^2 = gamma p / rho. Lies in (0,1) whenever p > 0 and
/// gamma <= 2.
double sound_speed_sq(const ThermoParams& par, double p, double rho);

/// Templated thermo evaluation used by the matrix assembly (double or Dual).
template <class T>
struct ThermoEvalT {
  T rho, a2, h;
};
using ThermoEval = ThermoEvalT<double>;

template <class T>
ThermoEvalT<T> thermo_eval(const ThermoParams& par, T p, T S) {
  ThermoEvalT<T> te;
  te.rho = T(par.A) * pow(p, 1.0 / par.gamma) * exp(-S / T(par.gamma));
  te.a2 = T(par.gamma) * p / te.rho;
  te.h = T(1.0) + T(par.gamma) * p / (T(par.gamma - 1.0) * te.rho);
  return te;
}

/// Admissibility audit of one state. Failures are reported, not thrown, so a
/// caller can print every violated condition at once.
struct HyperbolicityReport {
  bool positive_pressure = false;  ///< (9'): p > 0
  double pressure = 0.0;
  bool pressure_floor = false;  ///< (5.1): p >= pbar
  double floor_margin = 0.0;
  bool light_speed = false;  ///< (5.1''): 1 - |v| >= nu
  double light_speed_margin = 0.0;
  bool causal_sound = false;  ///< 0 < c_s^2 < 1
  double sound_speed_squared = 0.0;
  bool gamma_in_range = false;  ///< gamma <= 2

  bool admissible() const {
    return positive_pressure && pressure_floor && light_speed && causal_sound &&
           gamma_in_range;
  }
  std::string describe() const;
};

HyperbolicityReport hyperbolicity_report(const ThermoParams& par,
                                         const PrimitiveState& state);

/// Throws std::domain_error naming the violated condition if the state fails
/// the strict admissibility checks ((9'), |v| < 1, causality).
void require_admissible(const ThermoParams& par, const PrimitiveState& state);

}  // namespace rmhd
