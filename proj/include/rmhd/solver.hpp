#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmhd/basic_state.hpp"
#include "rmhd/linearized.hpp"

namespace rmhd {

/// One diagnostics record. Linearized runs fill the first group; periodic
/// nonlinear runs fill the second.
struct DiagnosticsRow {
  double t = 0.0;
  // linearized
  double I = 0.0;            ///< H1 surrogate + front norms
  double tan_energy = 0.0;   ///< |||Udot|||^2_{tan,1}
  double h1_energy = 0.0;    ///< tan + ||d1 Udot||^2
  double hn_jump = 0.0;      ///< L2 of [H_N-dot] on the boundary
  double xi_plus = 0.0, xi_minus = 0.0;  ///< L2 of the divergence fields
  double entropy_res = 0.0;  ///< principal-part residual of the S transport
  double rt_term = 0.0;      ///< 1/2 sum Gamma+ [d1 p-hat] (d2 phi)^2
  double qflux = 0.0;        ///< discrete boundary energy flux -1/2(frak(A1)...)
  double p2_res = 0.0;       ///< boundary pressure-equation identity residual
  // periodic nonlinear
  double sym_energy = 0.0;   ///< integral (A0(U) U . U)
  double div_h = 0.0;        ///< L2 of div H
  double w_norm = 0.0;       ///< max |(v3, H3)|
  double entropy_transport = 0.0;  ///< L2 of dS/dt along the flow
  double min_pressure = 0.0;
};

struct DiagnosticsSeries {
  std::vector<DiagnosticsRow> rows;
  bool linear = true;
  void write_csv(std::ostream& os) const;
  double max_I() const;
};

// ---- linearized IBVP (28)-(30) --------------------------------------------

struct LinearScenario {
  BasicState basic;
  Sources sources;
  bool use_lift = false;      ///< absorb g (and the transported g6) into a lift
  bool require_rt = false;    ///< abort when the audit fails (RTL)
  double dissipation = 0.01;  ///< 4th-difference coefficient
  int diag_every = 1;
};

struct LinearizedResult {
  DiagnosticsSeries diag;
  PerturbationFields final_fields;  ///< the evolved (post-lift) unknown at T
  std::vector<double> g6;           ///< transported lift datum at T
  int steps = 0;
  double dt = 0.0;
  bool aborted = false;
  std::string abort_reason;
};

/// Marches the linear problem from zero data: interior by the effective
/// operator with centered differences + 4th-difference dissipation and Heun
/// time stepping; boundary closed by the five linearized conditions (the
/// front equation plus four jump rows enforced along the four incoming
/// characteristic directions); far boundary by zero-order extrapolation.
/// Asserts the (2,2,2) per-side characteristic signature at every boundary
/// node before starting.
LinearizedResult run_linearized(const LinearScenario& sc);

/// Constraint residuals evaluated on two consecutive linearized states.
struct ConstraintResiduals {
  double hn_jump = 0.0;       ///< L2 of [H_N-dot] at the later state
  double xi_plus = 0.0, xi_minus = 0.0;  ///< transport residual of xi
  double entropy_res = 0.0;   ///< transport residual of S-dot
  double p2_res = 0.0;        ///< boundary pressure-identity residual
};
ConstraintResiduals constraint_monitors(const BasicState& bs,
                                        const PerturbationFields& prev,
                                        const PerturbationFields& cur, double t_cur,
                                        double dt, const Sources& sources);

// ---- smooth periodic nonlinear runs ----------------------------------------

struct PeriodicInitSpec {
  double p0 = 1.0, dp = 0.05;
  double S0 = 0.0, dS = 0.2;
  double v_amp = 0.05;
  double H01 = 1.0, H02 = 0.0;  ///< uniform background field
  double dH = 0.1;              ///< streamfunction amplitude (divergence-free)
  double w3_v = 0.0, w3_H = 0.0;  ///< out-of-plane seed (zero for planar runs)
};

/// Smooth periodic data: p, S trigonometric, v small, H = background + curl of
/// a streamfunction (analytically divergence-free). Components (p,u,H,S), 8.
Field make_periodic_init(const Grid& grid, const PeriodicInitSpec& spec);

struct PeriodicScenario {
  ThermoParams params;
  Grid grid;             ///< periodic1 should be set
  Field init;            ///< 8-component initial data
  double dissipation = 0.01;
  int diag_every = 1;
  int max_steps = 0;     ///< 0: run to grid.T
  double pressure_floor = -1.0;  ///< abort threshold; <0 selects 3/4 pbar
};

struct PeriodicResult {
  DiagnosticsSeries diag;
  Field final_fields;
  int steps = 0;
  double dt = 0.0;
  bool aborted = false;
  std::string abort_reason;
};

/// Integrates the quasilinear symmetric system on the torus (no boundary),
/// recording div H, the planar-flow components W = (v3, H3), the entropy
/// transport residual and the symmetric energy.
PeriodicResult run_nonlinear_periodic(const PeriodicScenario& sc);

}  // namespace rmhd
