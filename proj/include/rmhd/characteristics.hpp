#pragma once

#include <Eigen/Core>

#include "rmhd/eos.hpp"
#include "rmhd/state.hpp"
#include "rmhd/symmetrizer.hpp"

namespace rmhd {

using Vector12 = Eigen::Matrix<double, 12, 1>;

/// Relative threshold (against the spectral radius) below which a pencil
/// eigenvalue is counted as zero; also used for numerical rank.
inline constexpr double kZeroEigRel = 1e-9;

/// Eigenvalues of the planar characteristic pencil det(A1 N1 + A2 N2 - l A0) = 0
/// for one state, sorted ascending, with the shift l - front_speed and the
/// magnetosonic speeds read off the ordered pattern
///   l1 = v_N - c_f-,  l2 = v_N - c_s-,  l3 = l4 = v_N,
///   l5 = v_N + c_s+,  l6 = v_N + c_f+.
struct CharSpectrum {
  Vector6 lambdas;
  Vector6 shifted;
  double v_N = 0.0;  ///< v . N at the state (N not normalized)
  double c_f_minus = 0.0, c_s_minus = 0.0, c_s_plus = 0.0, c_f_plus = 0.0;

  double min_speed() const;
};

CharSpectrum char_spectrum(const ThermoParams& par, const PrimitiveState& state,
                           const Vec2& N, double front_speed);

/// Sign counts and rank of the two-sided boundary pencil
///   frak(A1) = diag( M(U+), -M(U-) ),   M(U) = A1 - A0 dtphi - A2 d2phi,
/// against frak(A0) = diag(A0+, A0-). For an admissible contact state the
/// counts are (4 positive, 4 negative, 4 zero) and rank frak(A1) = 8.
struct BoundarySignature {
  int n_pos = 0, n_neg = 0, n_zero = 0;
  int rank = 0;
  Vector12 lambdas;   ///< full pencil spectrum, ascending
  bool degenerate = false;  ///< extra near-zero eigenvalues (H_N ~ 0 collapse)
};

struct SignatureOptions {
  double contact_tol = 1e-8;    ///< tolerance for the contact-trace precondition
  bool allow_degenerate = false;  ///< permit |H_N| < kappa (reported, not thrown)
  bool check_contact = true;
};

/// left = state on the x1 < phi side, right = state on the x1 > phi side.
BoundarySignature boundary_signature(const ThermoParams& par,
                                     const PrimitiveState& left,
                                     const PrimitiveState& right, double d2phi,
                                     double dtphi,
                                     const SignatureOptions& opts = {});

/// min(c_s-, c_s+, c_f-, c_f+) for the pencil in direction N; strictly positive
/// iff H_N != 0 up to eigensolver tolerance.
double speed_positivity_margin(const ThermoParams& par, const PrimitiveState& state,
                               const Vec2& N);

}  // namespace rmhd
