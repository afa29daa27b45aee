#include "rmhd/characteristics.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Dense>

namespace rmhd {

namespace {

Vector6 pencil_eigs(const Mat6& AN, const Mat6& A0) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat6> es(AN, A0,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::domain_error(
        "characteristic pencil eigensolve failed (A0 not positive definite?)");
  return es.eigenvalues();
}

}  // namespace

double CharSpectrum::min_speed() const {
  return std::min({c_f_minus, c_s_minus, c_s_plus, c_f_plus});
}

CharSpectrum char_spectrum(const ThermoParams& par, const PrimitiveState& state,
                           const Vec2& N, double front_speed) {
  const MatrixSet ms = assemble(par, state);
  const Mat6 A0 = planar(ms.A0);
  const Mat6 AN = planar((N[0] * ms.A[0] + N[1] * ms.A[1]).eval());
  CharSpectrum cs;
  cs.lambdas = pencil_eigs(AN, A0);
  cs.shifted = cs.lambdas.array() - front_speed;
  cs.v_N = state.v[0] * N[0] + state.v[1] * N[1];
  cs.c_f_minus = cs.v_N - cs.lambdas[0];
  cs.c_s_minus = cs.v_N - cs.lambdas[1];
  cs.c_s_plus = cs.lambdas[4] - cs.v_N;
  cs.c_f_plus = cs.lambdas[5] - cs.v_N;
  return cs;
}

BoundarySignature boundary_signature(const ThermoParams& par,
                                     const PrimitiveState& left,
                                     const PrimitiveState& right, double d2phi,
                                     double dtphi, const SignatureOptions& opts) {
  if (opts.check_contact) {
    const double scale = std::max({1.0, right.p, right.H.norm(), left.p});
    const double res =
        std::max({std::abs(right.p - left.p), (right.v - left.v).norm(),
                  (right.H - left.H).norm()});
    const double vN = right.v[0] - right.v[1] * d2phi;
    if (res > opts.contact_tol * scale ||
        std::abs(dtphi - vN) > opts.contact_tol * std::max(1.0, std::abs(vN)))
      throw std::invalid_argument(
          "boundary_signature: traces do not satisfy the contact conditions (12')");
  }
  const double HN_r = right.H[0] - right.H[1] * d2phi;
  const double HN_l = left.H[0] - left.H[1] * d2phi;
  if (!opts.allow_degenerate &&
      (std::abs(HN_r) < par.kappa || std::abs(HN_l) < par.kappa))
    throw std::invalid_argument(
        "boundary_signature: |H_N| < kappa (mf.1), slow speeds degenerate to zero");

  // frak(A1) = diag(M(right), -M(left)) with M = A1 - A0*dtphi - A2*d2phi.
  Eigen::Matrix<double, 12, 12> bigA0 = Eigen::Matrix<double, 12, 12>::Zero();
  Eigen::Matrix<double, 12, 12> bigA1 = Eigen::Matrix<double, 12, 12>::Zero();
  const PrimitiveState* sides[2] = {&right, &left};
  for (int s = 0; s < 2; ++s) {
    const MatrixSet ms = assemble(par, *sides[s]);
    const Mat6 M =
        planar((ms.A[0] - dtphi * ms.A0 - d2phi * ms.A[1]).eval());
    const double sign = (s == 0) ? 1.0 : -1.0;
    bigA0.block<6, 6>(6 * s, 6 * s) = planar(ms.A0);
    bigA1.block<6, 6>(6 * s, 6 * s) = sign * M;
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix<double, 12, 12>> es(
      bigA1, bigA0, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::domain_error("boundary_signature: pencil eigensolve failed");

  BoundarySignature sig;
  sig.lambdas = es.eigenvalues();
  const double rad = sig.lambdas.cwiseAbs().maxCoeff();
  const double thr = kZeroEigRel * std::max(rad, 1e-300);
  for (int i = 0; i < 12; ++i) {
    if (sig.lambdas[i] > thr)
      ++sig.n_pos;
    else if (sig.lambdas[i] < -thr)
      ++sig.n_neg;
    else
      ++sig.n_zero;
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 12, 12>> svd(bigA1);
  const auto& sv = svd.singularValues();
  sig.rank = (sv.array() > kZeroEigRel * sv[0]).count();
  sig.degenerate = sig.n_zero > 4 || std::abs(HN_r) < par.kappa ||
                   std::abs(HN_l) < par.kappa;
  return sig;
}

double speed_positivity_margin(const ThermoParams& par, const PrimitiveState& state,
                               const Vec2& N) {
  const double vN = state.v[0] * N[0] + state.v[1] * N[1];
  return char_spectrum(par, state, N, vN).min_speed();
}

}  // namespace rmhd
