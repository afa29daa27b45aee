#pragma once

#include <string>
#include <vector>

#include "rmhd/eos.hpp"
#include "rmhd/front.hpp"
#include "rmhd/grid.hpp"
#include "rmhd/kinematics.hpp"
#include "rmhd/state.hpp"
#include "rmhd/symmetrizer.hpp"

namespace rmhd {

enum class Side { Plus = 0, Minus = 1 };
inline int side_index(Side s) { return static_cast<int>(s); }
inline double side_sign(Side s) { return s == Side::Plus ? 1.0 : -1.0; }

/// The frozen background of the linearized problem: shifted states on the
/// half-strip (planar components (p, u1, u2, H1, H2, S)), the front, and the
/// shift constants Ubar<+-> = (pbar, 0, 0, Sbar<+->). Coefficient matrices are
/// always evaluated at Uhat + Ubar.
struct BasicState {
  ThermoParams params;
  Grid grid;
  Field plus, minus;  ///< shifted fields, 6 components per node
  FrontFunction front = FrontFunction::zero(32);
  double Sbar_plus = 0.0;
  double Sbar_minus = 0.0;  ///< chosen with Sbar_plus != Sbar_minus
  CutoffKind cutoff_kind = CutoffKind::Quintic;
  double bound_K = 100.0;  ///< norm bound entering (a22)

  const Field& field(Side s) const { return s == Side::Plus ? plus : minus; }
  Field& field(Side s) { return s == Side::Plus ? plus : minus; }
  double sbar(Side s) const { return s == Side::Plus ? Sbar_plus : Sbar_minus; }

  /// Uhat + Ubar at a node, as a planar 6-vector (p, u1, u2, H1, H2, S).
  Vector6 full_state(Side s, int i, int j) const;
  /// Same, converted to primitive (v-form) 3-vector storage.
  PrimitiveState primitive(Side s, int i, int j) const;
  /// Straightening data at the node (both sides at once).
  StraightenEval straighten_at(int i, int j) const;

  /// d2Psi-hat at a node for one side.
  double d2psi(Side s, int i, int j) const;
  /// H_N-hat = H1 - H2 d2Psi at a node (full state).
  double HN(Side s, int i, int j) const;
  /// v_N-hat = v1 - v2 d2Psi at a node (full state).
  double vN(Side s, int i, int j) const;

  /// One-sided second-order d/dx1 of a stored component at the boundary.
  double d1_at_boundary(Side s, int j, int c) const;
};

/// Primitive (v-form) from a planar 6-vector in u-form.
PrimitiveState primitive_from_vector6(const Vector6& U);
Vector6 vector6_from_primitive(const PrimitiveState& st);

struct AuditEntry {
  std::string condition;
  bool pass = false;
  double margin = 0.0;  ///< positive means satisfied with room
};

struct AuditOptions {
  double eq_tol = 1e-9;   ///< tolerance on boundary equalities (scale-aware)
  double fd_tol = -1.0;   ///< tolerance on discrete-derivative constraints;
                          ///< negative selects 10*max(h1,h2)^2 automatically
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  bool hard_pass = false;  ///< all conditions except the Rayleigh-Taylor sign
  bool rt_pass = false;    ///< (RTL) [d1 p] >= epsilon/2
  bool warn_phi_above_half = false;
  bool pass_all() const { return hard_pass && rt_pass; }
  const AuditEntry* find(const std::string& name) const;
  std::string describe() const;
};

/// Checks the full basic-state assumption list: (fi), (a5), (ls), (a12'),
/// (cdass), (jc1'), (RTL), the divergence constraints (14.1) and the
/// normal-field continuity (15.1) on the initial slice, and the norm
/// bound (a22).
AuditReport audit_basic_state(const BasicState& bs, const AuditOptions& opts = {});

// ---- presets -------------------------------------------------------------

struct UniformStateSpec {
  double p_hat = 0.9;     ///< shifted pressure (full p = pbar + p_hat)
  double v2 = 0.2;        ///< tangential velocity (v1 = 0 keeps v_N = dtphi = 0)
  double H1 = 1.0, H2 = 0.3;
  double S_plus = 0.3, S_minus = -0.3;  ///< shifted entropies
};

/// Constant basic state with a flat front; satisfies every audit condition
/// except (RTL) ([d1 p] = 0).
BasicState make_uniform_basic_state(const ThermoParams& par, const Grid& grid,
                                    const UniformStateSpec& spec = {});

/// Uniform state plus a pressure profile slope * x1 * chi(x1) on both sides,
/// so [d1 p] = 2*slope at the boundary: satisfies (RTL) for slope > eps/4.
BasicState make_rt_basic_state(const ThermoParams& par, const Grid& grid,
                               double slope = 0.3,
                               const UniformStateSpec& spec = {});

/// Uniform state carried over a curved front phi = amp cos(2 pi x2); the
/// stored dtphi trace is set to v_N^+ = v1 - v2 d2phi so (a12') holds.
BasicState make_curved_front_basic_state(const ThermoParams& par, const Grid& grid,
                                         double amp,
                                         const UniformStateSpec& spec = {});

}  // namespace rmhd
