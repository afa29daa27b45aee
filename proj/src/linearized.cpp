#include "rmhd/linearized.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "rmhd/detail/assembly.hpp"

namespace rmhd {

using detail::M8;
using detail::V3;

namespace {

// Planar extraction from a Dual 8x8: derivative part.
Mat6 planar_deriv(const M8<Dual>& m) {
  Mat6 out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out(i, j) = m(kPlanarIdx[i], kPlanarIdx[j]).d;
  return out;
}

Mat6 planar_value(const M8<double>& m) {
  Mat6 out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out(i, j) = m(kPlanarIdx[i], kPlanarIdx[j]);
  return out;
}

struct PlanarMats {
  Mat6 A0, A1, A2;
};

PlanarMats planar_mats(const ThermoParams& par, const Vector6& U) {
  if (!(U[0] > 0.0))
    throw std::domain_error("coefficient assembly: full pressure <= 0 (9')");
  const auto te = thermo_eval<double>(par, U[0], U[5]);
  const V3<double> u{U[1], U[2], 0.0};
  const V3<double> H{U[3], U[4], 0.0};
  const auto k = detail::kin_from_u<double>(u, H);
  PlanarMats pm;
  pm.A0 = planar_value(detail::assemble_A0(te, k, H));
  pm.A1 = planar_value(detail::assemble_Aj(te, k, H, 0));
  pm.A2 = planar_value(detail::assemble_Aj(te, k, H, 1));
  return pm;
}

}  // namespace

PerturbationFields PerturbationFields::zero(const Grid& g) {
  PerturbationFields p;
  p.plus = Field(g.n1, g.n2, 6);
  p.minus = Field(g.n1, g.n2, 6);
  p.phi.assign(g.n2, 0.0);
  return p;
}

PerturbationFields good_unknown(const BasicState& bs, const Field& Uplus,
                                const Field& Uminus,
                                const std::vector<double>& phi) {
  PerturbationFields out;
  out.phi = phi;
  for (Side s : {Side::Plus, Side::Minus}) {
    const Field& U = (s == Side::Plus) ? Uplus : Uminus;
    const Field d1hat = fd_d1(bs.field(s), bs.grid.h1());
    Field res(bs.grid.n1, bs.grid.n2, 6);
    for (int i = 0; i < bs.grid.n1; ++i) {
      const double chi = cutoff(side_sign(s) * bs.grid.x1(i), bs.cutoff_kind);
      for (int j = 0; j < bs.grid.n2; ++j) {
        const StraightenEval e = bs.straighten_at(i, j);
        const double d1Phi = (s == Side::Plus) ? e.d1Phi_plus : e.d1Phi_minus;
        const double factor = chi * phi[j] / d1Phi;
        for (int c = 0; c < 6; ++c)
          res(i, j, c) = U(i, j, c) - factor * d1hat(i, j, c);
      }
    }
    out.field(s) = std::move(res);
  }
  return out;
}

void good_unknown_invert(const BasicState& bs, PerturbationFields& pert,
                         Field& Uplus, Field& Uminus) {
  for (Side s : {Side::Plus, Side::Minus}) {
    const Field& Ud = pert.field(s);
    const Field d1hat = fd_d1(bs.field(s), bs.grid.h1());
    Field& out = (s == Side::Plus) ? Uplus : Uminus;
    out = Field(bs.grid.n1, bs.grid.n2, 6);
    for (int i = 0; i < bs.grid.n1; ++i) {
      const double chi = cutoff(side_sign(s) * bs.grid.x1(i), bs.cutoff_kind);
      for (int j = 0; j < bs.grid.n2; ++j) {
        const StraightenEval e = bs.straighten_at(i, j);
        const double d1Phi = (s == Side::Plus) ? e.d1Phi_plus : e.d1Phi_minus;
        const double factor = chi * pert.phi[j] / d1Phi;
        for (int c = 0; c < 6; ++c)
          out(i, j, c) = Ud(i, j, c) + factor * d1hat(i, j, c);
      }
    }
  }
}

Vec2 perturbation_velocity(const Vec2& udot, const Vec2& vhat) {
  const double gamma = 1.0 / std::sqrt(1.0 - vhat.squaredNorm());
  return (udot - vhat.dot(udot) * vhat) / gamma;
}

MatrixTriple coefficient_derivative(const ThermoParams& par, const Vector6& U_full,
                                    const StraightenPoint& sp, const Vector6& Y) {
  const Dual p(U_full[0], Y[0]);
  const Dual S(U_full[5], Y[5]);
  const V3<Dual> u{Dual(U_full[1], Y[1]), Dual(U_full[2], Y[2]), Dual(0.0, 0.0)};
  const V3<Dual> H{Dual(U_full[3], Y[3]), Dual(U_full[4], Y[4]), Dual(0.0, 0.0)};
  const auto te = thermo_eval<Dual>(par, p, S);
  const auto k = detail::kin_from_u<Dual>(u, H);
  MatrixTriple t;
  t.dA0 = planar_deriv(detail::assemble_A0(te, k, H));
  const Mat6 dA1 = planar_deriv(detail::assemble_Aj(te, k, H, 0));
  t.dA2 = planar_deriv(detail::assemble_Aj(te, k, H, 1));
  t.dA1t = (dA1 - sp.dtPsi * t.dA0 - sp.d2Psi * t.dA2) / sp.d1Phi;
  return t;
}

Mat6 coefficient_C(const ThermoParams& par, const Vector6& U_full,
                   const StraightenPoint& sp, const Vector6& dtU, const Vector6& d1U,
                   const Vector6& d2U) {
  Mat6 C;
  for (int c = 0; c < 6; ++c) {
    Vector6 e = Vector6::Zero();
    e[c] = 1.0;
    const MatrixTriple t = coefficient_derivative(par, U_full, sp, e);
    C.col(c) = t.dA0 * dtU + t.dA1t * d1U + t.dA2 * d2U;
  }
  return C;
}

NodeCoeffs node_coeffs(const BasicState& bs, Side s, int i, int j) {
  const Vector6 U = bs.full_state(s, i, j);
  const StraightenEval e = bs.straighten_at(i, j);
  StraightenPoint sp;
  sp.dtPsi = (s == Side::Plus) ? e.dtPsi_plus : e.dtPsi_minus;
  sp.d2Psi = (s == Side::Plus) ? e.d2Psi_plus : e.d2Psi_minus;
  sp.d1Phi = (s == Side::Plus) ? e.d1Phi_plus : e.d1Phi_minus;

  const PlanarMats pm = planar_mats(bs.params, U);
  NodeCoeffs nc;
  nc.A0 = pm.A0;
  nc.A0inv = pm.A0.inverse();
  nc.A1t = (pm.A1 - sp.dtPsi * pm.A0 - sp.d2Psi * pm.A2) / sp.d1Phi;
  nc.A2 = pm.A2;

  // basic-state gradients (frozen in time)
  const Field& f = bs.field(s);
  const Grid& g = bs.grid;
  Vector6 d1U, d2U;
  for (int c = 0; c < 6; ++c) {
    if (i == 0)
      d1U[c] = (-3.0 * f(0, j, c) + 4.0 * f(1, j, c) - f(2, j, c)) / (2.0 * g.h1());
    else if (i == g.n1 - 1)
      d1U[c] =
          (3.0 * f(i, j, c) - 4.0 * f(i - 1, j, c) + f(i - 2, j, c)) / (2.0 * g.h1());
    else
      d1U[c] = (f(i + 1, j, c) - f(i - 1, j, c)) / (2.0 * g.h1());
    d2U[c] = (f(i, j + 1, c) - f(i, j - 1, c)) / (2.0 * g.h2());
  }
  nc.C = coefficient_C(bs.params, U, sp, Vector6::Zero(), d1U, d2U);
  return nc;
}

Field fd_d1(const Field& U, double h1) {
  Field out(U.n1(), U.n2(), U.nc());
  const int n1 = U.n1();
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < U.n2(); ++j)
      for (int c = 0; c < U.nc(); ++c) {
        if (i == 0)
          out(i, j, c) = (-3.0 * U(0, j, c) + 4.0 * U(1, j, c) - U(2, j, c)) / (2.0 * h1);
        else if (i == n1 - 1)
          out(i, j, c) =
              (3.0 * U(i, j, c) - 4.0 * U(i - 1, j, c) + U(i - 2, j, c)) / (2.0 * h1);
        else
          out(i, j, c) = (U(i + 1, j, c) - U(i - 1, j, c)) / (2.0 * h1);
      }
  return out;
}

Field fd_d2_periodic(const Field& U, double h2) {
  Field out(U.n1(), U.n2(), U.nc());
  for (int i = 0; i < U.n1(); ++i)
    for (int j = 0; j < U.n2(); ++j)
      for (int c = 0; c < U.nc(); ++c)
        out(i, j, c) = (U(i, j + 1, c) - U(i, j - 1, c)) / (2.0 * h2);
  return out;
}

Field effective_interior_apply(const BasicState& bs, Side s, const Field& U,
                               const Field& dtU, const Field& d1U, const Field& d2U,
                               const Field* f) {
  const Grid& g = bs.grid;
  Field out(g.n1, g.n2, 6);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const NodeCoeffs nc = node_coeffs(bs, s, i, j);
      Vector6 Uv, dtv, d1v, d2v;
      for (int c = 0; c < 6; ++c) {
        Uv[c] = U(i, j, c);
        dtv[c] = dtU(i, j, c);
        d1v[c] = d1U(i, j, c);
        d2v[c] = d2U(i, j, c);
      }
      Vector6 r = nc.A0 * dtv + nc.A1t * d1v + nc.A2 * d2v + nc.C * Uv;
      if (f)
        for (int c = 0; c < 6; ++c) r[c] -= (*f)(i, j, c);
      out.set_vec(i, j, r);
    }
  return out;
}

Field dropped_zeroth_order_terms(const BasicState& bs, Side s,
                                 const std::vector<double>& phi) {
  const Grid& g = bs.grid;
  const Field d1hat = fd_d1(bs.field(s), g.h1());
  const Field d2hat = fd_d2_periodic(bs.field(s), g.h2());
  // residual of the basic state under the straightened operator
  Field resid(g.n1, g.n2, 6);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const NodeCoeffs nc = node_coeffs(bs, s, i, j);
      Vector6 d1v, d2v;
      for (int c = 0; c < 6; ++c) {
        d1v[c] = d1hat(i, j, c);
        d2v[c] = d2hat(i, j, c);
      }
      const Vector6 r = nc.A1t * d1v + nc.A2 * d2v;  // dtU-hat = 0 (frozen)
      resid.set_vec(i, j, r);
    }
  const Field d1res = fd_d1(resid, g.h1());
  Field out(g.n1, g.n2, 6);
  for (int i = 0; i < g.n1; ++i) {
    const double chi = cutoff(side_sign(s) * g.x1(i), bs.cutoff_kind);
    for (int j = 0; j < g.n2; ++j) {
      const StraightenEval e = bs.straighten_at(i, j);
      const double d1Phi = (s == Side::Plus) ? e.d1Phi_plus : e.d1Phi_minus;
      for (int c = 0; c < 6; ++c)
        out(i, j, c) = -chi * phi[j] / d1Phi * d1res(i, j, c);
    }
  }
  return out;
}

Eigen::Matrix<double, 5, Eigen::Dynamic> boundary_operator_apply(
    const BasicState& bs, const PerturbationFields& pert,
    const std::vector<double>& dtphi) {
  const Grid& g = bs.grid;
  // precondition (1v): [d1 v-hat] = 0 at the boundary
  {
    double worst = 0.0;
    for (int j = 0; j < g.n2; ++j) {
      auto vat = [&](Side s, int i) {
        const Vector6 U = bs.full_state(s, i, j);
        const double gam = std::sqrt(1.0 + U[1] * U[1] + U[2] * U[2]);
        return Vec2(U[1] / gam, U[2] / gam);
      };
      const Vec2 d1vp =
          (-3.0 * vat(Side::Plus, 0) + 4.0 * vat(Side::Plus, 1) - vat(Side::Plus, 2)) /
          (2.0 * g.h1());
      const Vec2 d1vm = (-3.0 * vat(Side::Minus, 0) + 4.0 * vat(Side::Minus, 1) -
                         vat(Side::Minus, 2)) /
                        (2.0 * g.h1());
      worst = std::max(worst, (d1vp + d1vm).cwiseAbs().maxCoeff());
    }
    if (worst > 10.0 * std::pow(std::max(g.h1(), g.h2()), 2) + 1e-9)
      throw std::invalid_argument(
          "boundary_operator_apply: basic state violates [d1 v-hat] = 0 (1v)");
  }

  Eigen::Matrix<double, 5, Eigen::Dynamic> rows(5, g.n2);
  for (int j = 0; j < g.n2; ++j) {
    const double d2phihat = bs.front.d2phi(j);
    const Vector6 Up = bs.full_state(Side::Plus, 0, j);
    const double gam = std::sqrt(1.0 + Up[1] * Up[1] + Up[2] * Up[2]);
    const Vec2 vhat(Up[1] / gam, Up[2] / gam);

    auto vdot = [&](Side s) {
      const Field& f = pert.field(s);
      return perturbation_velocity(Vec2(f(0, j, 1), f(0, j, 2)), vhat);
    };
    const Vec2 vdp = vdot(Side::Plus), vdm = vdot(Side::Minus);
    const Field& fp = pert.plus;
    const Field& fm = pert.minus;

    const double jd1p = bs.d1_at_boundary(Side::Plus, j, 0) +
                        bs.d1_at_boundary(Side::Minus, j, 0);
    // H-tau-hat = H1 d2Psi + H2 per side; sum of one-sided d1 traces
    auto d1Htau = [&](Side s) {
      auto htau = [&](int i) {
        const StraightenEval e = bs.straighten_at(i, j);
        const double d2Psi = (s == Side::Plus) ? e.d2Psi_plus : e.d2Psi_minus;
        const Vector6 U = bs.full_state(s, i, j);
        return U[3] * d2Psi + U[4];
      };
      return (-3.0 * htau(0) + 4.0 * htau(1) - htau(2)) / (2.0 * g.h1());
    };
    const double jd1Htau = d1Htau(Side::Plus) + d1Htau(Side::Minus);
    // d1 of v_N-hat+ at the boundary
    auto vNhat = [&](int i) { return bs.vN(Side::Plus, i, j); };
    const double d1vN =
        (-3.0 * vNhat(0) + 4.0 * vNhat(1) - vNhat(2)) / (2.0 * g.h1());

    const double phi = pert.phi[j];
    rows(0, j) = (fp(0, j, 0) - fm(0, j, 0)) + phi * jd1p;
    rows(1, j) = vdp[0] - vdm[0];
    rows(2, j) = vdp[1] - vdm[1];
    const double Htaup = fp(0, j, 3) * d2phihat + fp(0, j, 4);
    const double Htaum = fm(0, j, 3) * d2phihat + fm(0, j, 4);
    rows(3, j) = (Htaup - Htaum) + phi * jd1Htau;
    // d2 of the perturbation front (4th order, periodic)
    const int n = g.n2;
    auto ph = [&](int jj) { return pert.phi[((jj % n) + n) % n]; };
    const double d2phi_pert =
        (ph(j - 2) - 8.0 * ph(j - 1) + 8.0 * ph(j + 1) - ph(j + 2)) / (12.0 * g.h2());
    const double vdotN = vdp[0] - vdp[1] * d2phihat;
    rows(4, j) = dtphi[j] + vhat[1] * d2phi_pert - vdotN - phi * d1vN;
  }
  return rows;
}

QuadraticFormValues boundary_quadratic_form(const ThermoParams& par,
                                            const PrimitiveState& plus_full,
                                            const PrimitiveState& minus_full,
                                            double d2phi, double dtphi,
                                            const Vector6& Udot_plus,
                                            const Vector6& Udot_minus) {
  // preconditions (a12'): continuous traces, co-moving front
  const double scale = std::max({1.0, plus_full.p, plus_full.H.norm()});
  if (std::abs(plus_full.p - minus_full.p) > 1e-8 * scale ||
      (plus_full.v - minus_full.v).norm() > 1e-8 ||
      (plus_full.H - minus_full.H).norm() > 1e-8 * scale)
    throw std::invalid_argument(
        "boundary_quadratic_form: traces must satisfy [p]=[v]=[H]=0 (a12')");
  const double vN = plus_full.v[0] - plus_full.v[1] * d2phi;
  if (std::abs(dtphi - vN) > 1e-8 * std::max(1.0, std::abs(vN)))
    throw std::invalid_argument(
        "boundary_quadratic_form: dtphi != v_N (a12') on the given trace");

  QuadraticFormValues out;
  // direct contraction with frak(A1-hat)
  for (Side s : {Side::Plus, Side::Minus}) {
    const PrimitiveState& st = (s == Side::Plus) ? plus_full : minus_full;
    const Vector6& Ud = (s == Side::Plus) ? Udot_plus : Udot_minus;
    const MatrixSet ms = assemble(par, st);
    const Mat6 M = planar((ms.A[0] - dtphi * ms.A0 - d2phi * ms.A[1]).eval());
    out.direct += -0.5 * side_sign(s) * Ud.dot(M * Ud);
  }

  // closed form
  const double s2 = 1.0 + d2phi * d2phi;
  const double sigma2 = dtphi * dtphi / s2;
  const double vtau = plus_full.v[0] * d2phi + plus_full.v[1];
  const double sigma_tau = vN * vtau / s2;
  const auto [gamma, u] = lorentz_extend(plus_full.v);
  (void)u;
  const Vec2 vhat(plus_full.v[0], plus_full.v[1]);
  const Vec2 vd = perturbation_velocity(Vec2(Udot_plus[1], Udot_plus[2]), vhat);
  const double vdN = vd[0] - vd[1] * d2phi;
  const double HN = plus_full.H[0] - plus_full.H[1] * d2phi;
  const double H2 = plus_full.H[1];
  const double jHt = (Udot_plus[3] * d2phi + Udot_plus[4]) -
                     (Udot_minus[3] * d2phi + Udot_minus[4]);
  const double jHN = (Udot_plus[3] - Udot_plus[4] * d2phi) -
                     (Udot_minus[3] - Udot_minus[4] * d2phi);
  const double jp = Udot_plus[0] - Udot_minus[0];
  out.reduced = gamma * ((HN * vd[1] - H2 * vdN) *
                             ((1.0 - sigma2) * jHt + sigma_tau * jHN) -
                         vdN * jp);
  return out;
}

// ---- lifting ---------------------------------------------------------------

LiftState::LiftState(const BasicState& bs, Sources sources)
    : bs_(&bs), src_(std::move(sources)) {
  minv_plus_.resize(bs.grid.n2);
  minv_minus_.resize(bs.grid.n2);
  for (int j = 0; j < bs.grid.n2; ++j) {
    for (Side s : {Side::Plus, Side::Minus}) {
      const Vector6 U = bs.full_state(s, 0, j);
      const double gam = std::sqrt(1.0 + U[1] * U[1] + U[2] * U[2]);
      Eigen::Matrix2d M;
      M(0, 0) = (1.0 + U[1] * U[1]) / gam;
      M(0, 1) = U[1] * U[2] / gam;
      M(1, 0) = M(0, 1);
      M(1, 1) = (1.0 + U[2] * U[2]) / gam;
      ((s == Side::Plus) ? minv_plus_ : minv_minus_)[j] = M.inverse();
    }
  }
}

double LiftState::fH_jump(double t, int j) const {
  const Grid& g = bs_->grid;
  const double x2 = g.x2(j);
  const Eigen::Vector2d Nhat(1.0, -bs_->front.d2phi(j));
  double out = 0.0;
  for (Side s : {Side::Plus, Side::Minus}) {
    const Vector6 f = src_.eval_f(s, t, 0.0, x2);
    const Eigen::Vector2d fH =
        ((s == Side::Plus) ? minv_plus_ : minv_minus_)[j] *
        Eigen::Vector2d(f[3], f[4]);
    out += side_sign(s) * fH.dot(Nhat);
  }
  return out;
}

std::vector<double> LiftState::g6_rhs(double t, const std::vector<double>& g6) const {
  const Grid& g = bs_->grid;
  const int n = g.n2;
  std::vector<double> flux(n), rhs(n);
  for (int j = 0; j < n; ++j) {
    const Vector6 U = bs_->full_state(Side::Plus, 0, j);
    const double gam = std::sqrt(1.0 + U[1] * U[1] + U[2] * U[2]);
    flux[j] = (U[2] / gam) * g6[j];
  }
  auto at = [&](int j) { return ((j % n) + n) % n; };
  for (int j = 0; j < n; ++j) {
    const double d2 = (flux[at(j + 1)] - flux[at(j - 1)]) / (2.0 * g.h2());
    const double diss = (g6[at(j - 2)] - 4.0 * g6[at(j - 1)] + 6.0 * g6[j] -
                         4.0 * g6[at(j + 1)] + g6[at(j + 2)]) /
                        (16.0 * g.h2());
    rhs[j] = -d2 + fH_jump(t, j) - 0.01 * diss;
  }
  return rhs;
}

Vector6 LiftState::boundary_trace(Side s, int j, double t,
                                  const std::vector<double>& g6) const {
  const int n = bs_->grid.n2;
  j = ((j % n) + n) % n;
  const auto gv = src_.eval_g(t, bs_->grid.x2(j));
  const double d2phihat = bs_->front.d2phi(j);
  const Vector6 Ub = bs_->full_state(Side::Plus, 0, j);
  const double gam = std::sqrt(1.0 + Ub[1] * Ub[1] + Ub[2] * Ub[2]);
  const Vec2 vhat(Ub[1] / gam, Ub[2] / gam);

  // plus side carries the g5 row through v_N+; minus side the remaining jumps
  Vec2 vt;
  double pt = 0.0, Ht1 = 0.0, Ht2 = 0.0, St = 0.0;
  if (s == Side::Plus) {
    vt = Vec2(-gv[4], 0.0);
  } else {
    vt = Vec2(-gv[4] - gv[1], -gv[2]);
    pt = -gv[0];
    const double Htau = -gv[3];
    const double HN = -g6[j];
    const double s2 = 1.0 + d2phihat * d2phihat;
    Ht1 = (HN + Htau * d2phihat) / s2;
    Ht2 = (Htau - HN * d2phihat) / s2;
  }
  // linearized v -> u at the boundary basic trace: u = gam (v + gam^2 (vhat.v) vhat)
  const Vec2 ut = gam * (vt + gam * gam * vhat.dot(vt) * vhat);
  Vector6 out;
  out << pt, ut[0], ut[1], Ht1, Ht2, St;
  return out;
}

Vector6 LiftState::dt_boundary_trace(Side s, int j, double t,
                                     const std::vector<double>& g6) const {
  // differentiate the trace construction: g-parts via dtg, g6-part via the
  // transport equation
  const int n = bs_->grid.n2;
  j = ((j % n) + n) % n;
  Eigen::Matrix<double, 5, 1> dgv = Eigen::Matrix<double, 5, 1>::Zero();
  if (src_.dtg) dgv = src_.dtg(t, bs_->grid.x2(j));
  const double d2phihat = bs_->front.d2phi(j);
  const Vector6 Ub = bs_->full_state(Side::Plus, 0, j);
  const double gam = std::sqrt(1.0 + Ub[1] * Ub[1] + Ub[2] * Ub[2]);
  const Vec2 vhat(Ub[1] / gam, Ub[2] / gam);

  Vec2 vt;
  double pt = 0.0, Ht1 = 0.0, Ht2 = 0.0;
  if (s == Side::Plus) {
    vt = Vec2(-dgv[4], 0.0);
  } else {
    vt = Vec2(-dgv[4] - dgv[1], -dgv[2]);
    pt = -dgv[0];
    const double Htau = -dgv[3];
    const double dtg6 = g6_rhs(t, g6)[j];
    const double HN = -dtg6;
    const double s2 = 1.0 + d2phihat * d2phihat;
    Ht1 = (HN + Htau * d2phihat) / s2;
    Ht2 = (Htau - HN * d2phihat) / s2;
  }
  const Vec2 ut = gam * (vt + gam * gam * vhat.dot(vt) * vhat);
  Vector6 out;
  out << pt, ut[0], ut[1], Ht1, Ht2, 0.0;
  return out;
}

Vector6 LiftState::value(Side s, int i, int j, double t,
                         const std::vector<double>& g6) const {
  const double chi = cutoff(bs_->grid.x1(i), bs_->cutoff_kind);
  if (chi == 0.0) return Vector6::Zero();
  return chi * boundary_trace(s, j, t, g6);
}

Vector6 LiftState::time_derivative(Side s, int i, int j, double t,
                                   const std::vector<double>& g6) const {
  const double chi = cutoff(bs_->grid.x1(i), bs_->cutoff_kind);
  if (chi == 0.0) return Vector6::Zero();
  return chi * dt_boundary_trace(s, j, t, g6);
}

}  // namespace rmhd
