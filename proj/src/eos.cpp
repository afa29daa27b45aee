#include "rmhd/eos.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rmhd {

void ThermoParams::validate() const {
  if (!(gamma > 1.0))
    throw std::invalid_argument("ThermoParams: adiabatic index must satisfy gamma > 1");
  if (gamma > 2.0 && !allow_gamma_above_two)
    throw std::invalid_argument(
        "ThermoParams: gamma > 2 breaks the causality reduction (9'); "
        "set allow_gamma_above_two to proceed at your own risk");
  if (!(A > 0.0)) throw std::invalid_argument("ThermoParams: A > 0 required");
  if (!(pbar > 0.0) || !(nu > 0.0) || !(kappa > 0.0) || !(epsilon > 0.0))
    throw std::invalid_argument("ThermoParams: margins pbar, nu, kappa, epsilon must be > 0");
}

double density_from_p_S(const ThermoParams& par, double p, double S) {
  if (!(p > 0.0))
    throw std::domain_error("density_from_p_S: p <= 0 violates hyperbolicity (9')");
  return par.A * std::pow(p, 1.0 / par.gamma) * std::exp(-S / par.gamma);
}

double pressure_from_rho_S(const ThermoParams& par, double rho, double S) {
  if (!(rho > 0.0)) throw std::domain_error("pressure_from_rho_S: rho <= 0");
  return std::pow(rho * std::exp(S / par.gamma) / par.A, par.gamma);
}

double internal_energy(const ThermoParams& par, double p, double rho) {
  if (!(p > 0.0) || !(rho > 0.0))
    throw std::domain_error("internal_energy: requires p > 0 and rho > 0");
  return p / ((par.gamma - 1.0) * rho);
}

double enthalpy(const ThermoParams& par, double p, double rho) {
  if (!(p > 0.0) || !(rho > 0.0))
    throw std::domain_error("enthalpy: requires p > 0 and rho > 0");
  return 1.0 + par.gamma * p / ((par.gamma - 1.0) * rho);
}

double sound_speed_sq(const ThermoParams& par, double p, double rho) {
  if (!(p > 0.0) || !(rho > 0.0))
    throw std::domain_error("sound_speed_sq: requires p > 0 and rho > 0");
  return (par.gamma * p / rho) / enthalpy(par, p, rho);
}

HyperbolicityReport hyperbolicity_report(const ThermoParams& par,
                                         const PrimitiveState& state) {
  HyperbolicityReport r;
  r.pressure = state.p;
  r.positive_pressure = state.p > 0.0;
  r.floor_margin = state.p - par.pbar;
  r.pressure_floor = r.floor_margin >= 0.0;
  const double vnorm = state.v.norm();
  r.light_speed_margin = (1.0 - vnorm) - par.nu;
  r.light_speed = r.light_speed_margin >= 0.0;
  r.gamma_in_range = par.gamma <= 2.0;
  if (r.positive_pressure && vnorm < 1.0) {
    const double rho = density_from_p_S(par, state.p, state.S);
    r.sound_speed_squared = sound_speed_sq(par, state.p, rho);
    r.causal_sound = r.sound_speed_squared > 0.0 && r.sound_speed_squared < 1.0;
  } else {
    r.sound_speed_squared = std::numeric_limits<double>::quiet_NaN();
    r.causal_sound = false;
  }
  return r;
}

std::string HyperbolicityReport::describe() const {
  std::ostringstream os;
  auto line = [&os](bool ok, const char* what, double margin) {
    os << (ok ? "  pass  " : "  FAIL  ") << what << "  (margin " << margin << ")\n";
  };
  line(positive_pressure, "(9')   positive pressure p > 0", pressure);
  line(pressure_floor, "(5.1)  pressure floor p >= pbar", floor_margin);
  line(light_speed, "(5.1'') light-speed margin 1-|v| >= nu", light_speed_margin);
  line(causal_sound, "causality 0 < c_s^2 < 1", sound_speed_squared);
  line(gamma_in_range, "gamma <= 2", 0.0);
  os << (admissible() ? "state admissible\n" : "state INADMISSIBLE\n");
  return os.str();
}

void require_admissible(const ThermoParams& par, const PrimitiveState& state) {
  if (!(state.p > 0.0))
    throw std::domain_error("inadmissible state: p <= 0 violates (9')");
  if (!(state.v.norm() < 1.0))
    throw std::domain_error("inadmissible state: |v| >= 1 (light-speed violation)");
  const double rho = density_from_p_S(par, state.p, state.S);
  const double cs2 = sound_speed_sq(par, state.p, rho);
  if (!(cs2 > 0.0 && cs2 < 1.0))
    throw std::domain_error("inadmissible state: c_s^2 outside (0,1)");
}

}  // namespace rmhd
