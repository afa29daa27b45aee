#pragma once

#include <vector>

#include "rmhd/cutoff.hpp"

namespace rmhd {

/// The front function phi on a uniform periodic grid over the unit circle,
/// together with its time derivative samples. Spatial derivative access is
/// 4th-order central (periodic). Immutable after construction.
class FrontFunction {
 public:
  /// phi values at x2 = j/n2, j = 0..n2-1; dtphi defaults to zero.
  explicit FrontFunction(std::vector<double> phi, std::vector<double> dtphi = {});

  static FrontFunction zero(int n2) { return FrontFunction(std::vector<double>(n2, 0.0)); }

  int size() const { return static_cast<int>(phi_.size()); }
  double h2() const { return 1.0 / size(); }
  double x2(int j) const { return j * h2(); }

  double phi(int j) const { return phi_[wrap(j)]; }
  double dtphi(int j) const { return dtphi_[wrap(j)]; }
  double d2phi(int j) const;  ///< 4th-order central difference

  double max_abs() const;

  /// Periodic cubic interpolation for off-node queries.
  double value_at(double x2) const;

 private:
  int wrap(int j) const {
    const int n = size();
    return ((j % n) + n) % n;
  }
  std::vector<double> phi_, dtphi_;
};

/// The straightening maps at a point (x1 fixed, front node j):
///   Psi+- = chi(+-x1) phi(x2),  Phi+- = +-x1 + Psi+-,
/// with first derivatives. d1Phi+ >= 1/2 and d1Phi- <= -1/2 are guaranteed by
/// |phi| <= 1 and the cut-off slope bound; straighten() asserts them.
struct StraightenEval {
  double Psi_plus, Psi_minus;
  double Phi_plus, Phi_minus;
  double d1Phi_plus, d1Phi_minus;
  double dtPsi_plus, dtPsi_minus;
  double d2Psi_plus, d2Psi_minus;
};

/// Throws std::domain_error when ||phi||_inf > 1 (admissibility (fi)).
StraightenEval straighten(const FrontFunction& front, double x1, int j,
                          CutoffKind kind = CutoffKind::Quintic);

/// Jump of the normal derivative: both sides live on the same half-plane
/// after straightening, so the jump is the SUM of the one-sided traces.
inline double normal_jump(double d1a_plus, double d1a_minus) {
  return d1a_plus + d1a_minus;
}

}  // namespace rmhd
