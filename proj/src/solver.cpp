#include "rmhd/solver.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "rmhd/characteristics.hpp"
#include "rmhd/detail/assembly.hpp"

namespace rmhd {

void DiagnosticsSeries::write_csv(std::ostream& os) const {
  if (linear) {
    os << "t,I,tan_energy,h1_energy,hn_jump,xi_plus,xi_minus,entropy_res,"
          "rt_term,qflux,p2_res\n";
    for (const auto& r : rows)
      os << r.t << ',' << r.I << ',' << r.tan_energy << ',' << r.h1_energy << ','
         << r.hn_jump << ',' << r.xi_plus << ',' << r.xi_minus << ','
         << r.entropy_res << ',' << r.rt_term << ',' << r.qflux << ',' << r.p2_res
         << '\n';
  } else {
    os << "t,sym_energy,div_h,w_norm,entropy_transport,min_pressure\n";
    for (const auto& r : rows)
      os << r.t << ',' << r.sym_energy << ',' << r.div_h << ',' << r.w_norm << ','
         << r.entropy_transport << ',' << r.min_pressure << '\n';
  }
}

double DiagnosticsSeries::max_I() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.I);
  return m;
}

namespace {

// trapezoid-in-x1 L2 norm squared of a field
double l2sq(const Field& f, const Grid& g) {
  double acc = 0.0;
  for (int i = 0; i < f.n1(); ++i) {
    const double w = (!g.periodic1 && (i == 0 || i == f.n1() - 1)) ? 0.5 : 1.0;
    for (int j = 0; j < f.n2(); ++j)
      for (int c = 0; c < f.nc(); ++c) acc += w * f(i, j, c) * f(i, j, c);
  }
  return acc * g.h1() * g.h2();
}

double l2sq_boundary(const std::vector<double>& v, double h2) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc * h2;
}

struct BoundaryNode {
  Eigen::Matrix<double, 12, 4> R;  // incoming characteristic directions
  Eigen::Matrix<double, 4, 12> B;  // jump rows
  Eigen::FullPivLU<Eigen::Matrix4d> K;
  Eigen::Matrix2d Pvel;  // v-dot = Pvel u-dot at the common trace
  double d2phihat = 0.0;
  double vhat2 = 0.0;
  double d1vN = 0.0;    // d1 of v_N-hat+ (one-sided)
  double jd1p = 0.0;    // [d1 p-hat] (sum convention)
  double jd1Htau = 0.0;
  double gammahat = 1.0;
  Mat6 Mplus, Mminus;  // A1-tilde traces (signature-signed)
};

struct LinWorkspace {
  std::vector<NodeCoeffs> coeff[2];  // [side][i * n2 + j]
  std::vector<BoundaryNode> bnodes;
  const NodeCoeffs& at(Side s, int i, int j, int n2) const {
    return coeff[side_index(s)][static_cast<size_t>(i) * n2 + j];
  }
};

struct LinState {
  Field Up, Um;
  std::vector<double> phi;
  std::vector<double> g6;

  Field& field(Side s) { return s == Side::Plus ? Up : Um; }
  const Field& field(Side s) const { return s == Side::Plus ? Up : Um; }
};

LinWorkspace build_workspace(const BasicState& bs) {
  const Grid& g = bs.grid;
  LinWorkspace ws;
  for (Side s : {Side::Plus, Side::Minus}) {
    auto& vec = ws.coeff[side_index(s)];
    vec.reserve(static_cast<size_t>(g.n1) * g.n2);
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j) vec.push_back(node_coeffs(bs, s, i, j));
  }

  ws.bnodes.resize(g.n2);
  for (int j = 0; j < g.n2; ++j) {
    BoundaryNode& bn = ws.bnodes[j];
    bn.d2phihat = bs.front.d2phi(j);
    const Vector6 Up = bs.full_state(Side::Plus, 0, j);
    bn.gammahat = std::sqrt(1.0 + Up[1] * Up[1] + Up[2] * Up[2]);
    const Vec2 vhat(Up[1] / bn.gammahat, Up[2] / bn.gammahat);
    bn.vhat2 = vhat[1];
    bn.Pvel = (Eigen::Matrix2d::Identity() - vhat * vhat.transpose()) / bn.gammahat;

    auto vN = [&](int i) { return bs.vN(Side::Plus, i, j); };
    bn.d1vN = (-3.0 * vN(0) + 4.0 * vN(1) - vN(2)) / (2.0 * g.h1());
    bn.jd1p = bs.d1_at_boundary(Side::Plus, j, 0) +
              bs.d1_at_boundary(Side::Minus, j, 0);
    auto htau = [&](Side s, int i) {
      const StraightenEval e = bs.straighten_at(i, j);
      const double d2Psi = (s == Side::Plus) ? e.d2Psi_plus : e.d2Psi_minus;
      const Vector6 U = bs.full_state(s, i, j);
      return U[3] * d2Psi + U[4];
    };
    auto d1htau = [&](Side s) {
      return (-3.0 * htau(s, 0) + 4.0 * htau(s, 1) - htau(s, 2)) / (2.0 * g.h1());
    };
    bn.jd1Htau = d1htau(Side::Plus) + d1htau(Side::Minus);

    // incoming characteristic directions from the per-side pencils
    bn.R.setZero();
    int col = 0;
    for (Side s : {Side::Plus, Side::Minus}) {
      const NodeCoeffs& nc = ws.at(s, 0, j, g.n2);
      if (s == Side::Plus)
        bn.Mplus = nc.A1t;
      else
        bn.Mminus = nc.A1t;
      Eigen::GeneralizedSelfAdjointEigenSolver<Mat6> es(nc.A1t, nc.A0);
      if (es.info() != Eigen::Success)
        throw std::runtime_error("run_linearized: boundary pencil eigensolve failed");
      const Vector6 lam = es.eigenvalues();
      const double rad = lam.cwiseAbs().maxCoeff();
      const double thr = kZeroEigRel * std::max(rad, 1e-300);
      int npos = 0, nneg = 0;
      for (int k = 0; k < 6; ++k) {
        if (lam[k] > thr) ++npos;
        if (lam[k] < -thr) ++nneg;
      }
      if (npos != 2 || nneg != 2)
        throw std::runtime_error(
            "run_linearized: boundary signature is not (2,2,2) per side; "
            "the five-condition closure does not apply");
      const int base = (s == Side::Plus) ? 0 : 6;
      for (int k = 4; k <= 5; ++k)
        bn.R.col(col++).segment<6>(base) = es.eigenvectors().col(k);
    }

    bn.B.setZero();
    bn.B(0, 0) = 1.0;
    bn.B(0, 6) = -1.0;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        bn.B(1 + r, 1 + c) = bn.Pvel(r, c);
        bn.B(1 + r, 7 + c) = -bn.Pvel(r, c);
      }
    bn.B(3, 3) = bn.d2phihat;
    bn.B(3, 4) = 1.0;
    bn.B(3, 9) = -bn.d2phihat;
    bn.B(3, 10) = -1.0;

    const Eigen::Matrix4d K = bn.B * bn.R;
    bn.K = Eigen::FullPivLU<Eigen::Matrix4d>(K);
    if (!bn.K.isInvertible())
      throw std::runtime_error(
          "run_linearized: incoming-characteristic correction is singular");
  }
  return ws;
}

struct LinRhs {
  Field dUp, dUm;
  std::vector<double> dphi;
  std::vector<double> dg6;
};

class LinearMarch {
 public:
  LinearMarch(const LinearScenario& sc)
      : sc_(sc), g_(sc.basic.grid), ws_(build_workspace(sc.basic)),
        lift_(sc.basic, sc.sources) {}

  LinRhs rhs(const LinState& st, double t) const {
    const Grid& g = g_;
    LinRhs out;
    out.dphi.assign(g.n2, 0.0);
    out.dg6.assign(g.n2, 0.0);

    for (Side s : {Side::Plus, Side::Minus}) {
      const Field& U = st.field(s);
      const Field D1 = fd_d1(U, g.h1());
      const Field D2 = fd_d2_periodic(U, g.h2());
      Field dU(g.n1, g.n2, 6);
      for (int i = 0; i < g.n1; ++i) {
        const double x1 = g.x1(i);
        const double chi = cutoff(x1, sc_.basic.cutoff_kind);
        const double dchi = cutoff_deriv(x1, sc_.basic.cutoff_kind);
        for (int j = 0; j < g.n2; ++j) {
          const NodeCoeffs& nc = ws_.at(s, i, j, g.n2);
          Vector6 Uv, d1v, d2v;
          for (int c = 0; c < 6; ++c) {
            Uv[c] = U(i, j, c);
            d1v[c] = D1(i, j, c);
            d2v[c] = D2(i, j, c);
          }
          Vector6 f = sc_.sources.eval_f(s, t, x1, g.x2(j));
          if (sc_.use_lift && chi != 0.0) {
            // f-tilde = f - L'_e(U-tilde)
            const Vector6 tr = lift_.boundary_trace(s, j, t, st.g6);
            const Vector6 trp = lift_.boundary_trace(s, j + 1, t, st.g6);
            const Vector6 trm = lift_.boundary_trace(s, j - 1, t, st.g6);
            const Vector6 dttr = lift_.dt_boundary_trace(s, j, t, st.g6);
            const Vector6 Ut = chi * tr;
            const Vector6 d1Ut = dchi * tr;
            const Vector6 d2Ut = chi * (trp - trm) / (2.0 * g.h2());
            const Vector6 dtUt = chi * dttr;
            f -= nc.A0 * dtUt + nc.A1t * d1Ut + nc.A2 * d2Ut + nc.C * Ut;
          }
          Vector6 r = nc.A0inv * (f - nc.A1t * d1v - nc.A2 * d2v - nc.C * Uv);
          // 4th-difference dissipation
          for (int c = 0; c < 6; ++c) {
            double diss = (U(i, j - 2, c) - 4.0 * U(i, j - 1, c) + 6.0 * U(i, j, c) -
                           4.0 * U(i, j + 1, c) + U(i, j + 2, c)) /
                          (16.0 * g.h2());
            if (i >= 2 && i <= g.n1 - 3)
              diss += (U(i - 2, j, c) - 4.0 * U(i - 1, j, c) + 6.0 * U(i, j, c) -
                       4.0 * U(i + 1, j, c) + U(i + 2, j, c)) /
                      (16.0 * g.h1());
            r[c] -= sc_.dissipation * diss;
          }
          dU.set_vec(i, j, r);
        }
      }
      if (s == Side::Plus)
        out.dUp = std::move(dU);
      else
        out.dUm = std::move(dU);
    }

    // front equation and g6 transport
    const int n = g.n2;
    auto ph = [&](int jj) { return st.phi[((jj % n) + n) % n]; };
    for (int j = 0; j < n; ++j) {
      const BoundaryNode& bn = ws_.bnodes[j];
      const Vec2 ud(st.Up(0, j, 1), st.Up(0, j, 2));
      const Vec2 vd = bn.Pvel * ud;
      const double vdN = vd[0] - vd[1] * bn.d2phihat;
      const double d2phi =
          (ph(j - 2) - 8.0 * ph(j - 1) + 8.0 * ph(j + 1) - ph(j + 2)) /
          (12.0 * g.h2());
      double g5 = 0.0;
      if (!sc_.use_lift && sc_.sources.g) g5 = sc_.sources.g(t, g.x2(j))[4];
      out.dphi[j] = vdN - bn.vhat2 * d2phi + st.phi[j] * bn.d1vN + g5;
    }
    if (sc_.use_lift) out.dg6 = lift_.g6_rhs(t, st.g6);
    return out;
  }

  void enforce(LinState& st, double t) const {
    const Grid& g = g_;
    for (Side s : {Side::Plus, Side::Minus}) {
      Field& U = st.field(s);
      for (int j = 0; j < g.n2; ++j)
        for (int c = 0; c < 6; ++c) U(g.n1 - 1, j, c) = U(g.n1 - 2, j, c);
    }
    for (int j = 0; j < g.n2; ++j) {
      const BoundaryNode& bn = ws_.bnodes[j];
      Eigen::Matrix<double, 12, 1> V;
      for (int c = 0; c < 6; ++c) {
        V[c] = st.Up(0, j, c);
        V[6 + c] = st.Um(0, j, c);
      }
      Eigen::Vector4d b = Eigen::Vector4d::Zero();
      if (!sc_.use_lift && sc_.sources.g) {
        const auto gv = sc_.sources.g(t, g.x2(j));
        b[0] = gv[0];
        b[1] = gv[1];
        b[2] = gv[2];
        b[3] = gv[3];
      }
      b[0] -= st.phi[j] * bn.jd1p;
      b[3] -= st.phi[j] * bn.jd1Htau;
      const Eigen::Vector4d alpha = bn.K.solve(b - bn.B * V);
      V += bn.R * alpha;
      for (int c = 0; c < 6; ++c) {
        st.Up(0, j, c) = V[c];
        st.Um(0, j, c) = V[6 + c];
      }
    }
  }

  const LinWorkspace& workspace() const { return ws_; }
  const LiftState& lift() const { return lift_; }

 private:
  const LinearScenario& sc_;
  const Grid& g_;
  LinWorkspace ws_;
  LiftState lift_;
};

void axpy_state(LinState& y, double a, const LinRhs& k) {
  for (Side s : {Side::Plus, Side::Minus}) {
    Field& f = y.field(s);
    const Field& d = (s == Side::Plus) ? k.dUp : k.dUm;
    auto& raw = f.raw();
    const auto& draw = d.raw();
    for (size_t n = 0; n < raw.size(); ++n) raw[n] += a * draw[n];
  }
  for (size_t j = 0; j < y.phi.size(); ++j) y.phi[j] += a * k.dphi[j];
  for (size_t j = 0; j < y.g6.size(); ++j) y.g6[j] += a * k.dg6[j];
}

bool state_finite(const LinState& st) {
  for (const Field* f : {&st.Up, &st.Um})
    for (double v : f->raw())
      if (!std::isfinite(v)) return false;
  for (double v : st.phi)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

LinearizedResult run_linearized(const LinearScenario& sc) {
  sc.basic.params.validate();
  sc.basic.grid.validate();
  const AuditReport audit = audit_basic_state(sc.basic);
  if (!audit.hard_pass)
    throw std::invalid_argument("run_linearized: basic state fails the audit:\n" +
                                audit.describe());
  if (sc.require_rt && !audit.rt_pass)
    throw std::invalid_argument(
        "run_linearized: (RTL) Rayleigh-Taylor margin violated:\n" +
        audit.describe());

  const Grid& g = sc.basic.grid;
  LinearMarch march(sc);

  LinState st;
  st.Up = Field(g.n1, g.n2, 6);
  st.Um = Field(g.n1, g.n2, 6);
  st.phi.assign(g.n2, 0.0);
  st.g6.assign(g.n2, 0.0);

  LinearizedResult res;
  res.diag.linear = true;
  res.steps = g.steps();
  res.dt = g.dt();

  LinState prev = st;
  const double dt = res.dt;
  for (int step = 0; step < res.steps; ++step) {
    const double t = step * dt;
    prev = st;

    const LinRhs k1 = march.rhs(st, t);
    LinState s1 = st;
    axpy_state(s1, dt, k1);
    march.enforce(s1, t + dt);
    const LinRhs k2 = march.rhs(s1, t + dt);
    axpy_state(st, 0.5 * dt, k1);
    axpy_state(st, 0.5 * dt, k2);
    march.enforce(st, t + dt);

    if (!state_finite(st)) {
      res.aborted = true;
      std::ostringstream os;
      os << "NaN detected at step " << step + 1;
      res.abort_reason = os.str();
      break;
    }

    if ((step + 1) % sc.diag_every == 0 || step + 1 == res.steps) {
      DiagnosticsRow row;
      row.t = t + dt;
      PerturbationFields pcur{st.Up, st.Um, st.phi};
      PerturbationFields pprev{prev.Up, prev.Um, prev.phi};
      const ConstraintResiduals cr =
          constraint_monitors(sc.basic, pprev, pcur, t + dt, dt, sc.sources);
      row.hn_jump = cr.hn_jump;
      row.xi_plus = cr.xi_plus;
      row.xi_minus = cr.xi_minus;
      row.entropy_res = cr.entropy_res;
      row.p2_res = cr.p2_res;

      // energies
      double tan = 0.0;
      for (Side s : {Side::Plus, Side::Minus}) {
        const Field& U = st.field(s);
        const Field& U0 = prev.field(s);
        Field dtU(g.n1, g.n2, 6);
        for (size_t n = 0; n < dtU.raw().size(); ++n)
          dtU.raw()[n] = (U.raw()[n] - U0.raw()[n]) / dt;
        tan += l2sq(U, g) + l2sq(dtU, g) + l2sq(fd_d2_periodic(U, g.h2()), g);
        row.h1_energy += l2sq(fd_d1(U, g.h1()), g);
      }
      row.tan_energy = tan;
      row.h1_energy += tan;
      std::vector<double> dtphi(g.n2), d2phi(g.n2);
      const int n = g.n2;
      auto ph = [&](int jj) { return st.phi[((jj % n) + n) % n]; };
      for (int j = 0; j < n; ++j) {
        dtphi[j] = (st.phi[j] - prev.phi[j]) / dt;
        d2phi[j] = (ph(j - 2) - 8.0 * ph(j - 1) + 8.0 * ph(j + 1) - ph(j + 2)) /
                   (12.0 * g.h2());
      }
      row.I = row.h1_energy + l2sq_boundary(st.phi, g.h2()) +
              l2sq_boundary(dtphi, g.h2()) + l2sq_boundary(d2phi, g.h2());

      // boundary energy flux and RT term
      for (int j = 0; j < n; ++j) {
        const BoundaryNode& bn = march.workspace().bnodes[j];
        Vector6 up, um;
        for (int c = 0; c < 6; ++c) {
          up[c] = st.Up(0, j, c);
          um[c] = st.Um(0, j, c);
        }
        row.qflux += -0.5 * (up.dot(bn.Mplus * up) + um.dot(bn.Mminus * um)) * g.h2();
        row.rt_term +=
            0.5 * bn.gammahat * bn.jd1p * d2phi[j] * d2phi[j] * g.h2();
      }
      res.diag.rows.push_back(row);
    }
  }

  res.final_fields = PerturbationFields{st.Up, st.Um, st.phi};
  res.g6 = st.g6;
  return res;
}

ConstraintResiduals constraint_monitors(const BasicState& bs,
                                        const PerturbationFields& prev,
                                        const PerturbationFields& cur, double t_cur,
                                        double dt, const Sources& sources) {
  const Grid& g = bs.grid;
  ConstraintResiduals out;

  // [H_N-dot] on the boundary
  {
    std::vector<double> jhn(g.n2);
    for (int j = 0; j < g.n2; ++j) {
      const double d2 = bs.front.d2phi(j);
      jhn[j] = (cur.plus(0, j, 3) - cur.plus(0, j, 4) * d2) -
               (cur.minus(0, j, 3) - cur.minus(0, j, 4) * d2);
    }
    out.hn_jump = std::sqrt(l2sq_boundary(jhn, g.h2()));
  }

  // xi and S transport residuals per side
  for (Side s : {Side::Plus, Side::Minus}) {
    auto xi_over_phi = [&](const Field& U) {
      // xi = d1(H_N-dot) + d2(H2-dot d1Phi), then divided by d1Phi
      Field hn(g.n1, g.n2, 1), h2p(g.n1, g.n2, 1);
      for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
          const StraightenEval e = bs.straighten_at(i, j);
          const double d2Psi = (s == Side::Plus) ? e.d2Psi_plus : e.d2Psi_minus;
          const double d1Phi = (s == Side::Plus) ? e.d1Phi_plus : e.d1Phi_minus;
          hn(i, j, 0) = U(i, j, 3) - U(i, j, 4) * d2Psi;
          h2p(i, j, 0) = U(i, j, 4) * d1Phi;
        }
      const Field d1hn = fd_d1(hn, g.h1());
      const Field d2h2p = fd_d2_periodic(h2p, g.h2());
      Field xi(g.n1, g.n2, 1);
      for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
          const StraightenEval e = bs.straighten_at(i, j);
          const double d1Phi = (s == Side::Plus) ? e.d1Phi_plus : e.d1Phi_minus;
          xi(i, j, 0) = (d1hn(i, j, 0) + d2h2p(i, j, 0)) / d1Phi;
        }
      return xi;
    };
    const Field xin = xi_over_phi(cur.field(s));
    const Field xip = xi_over_phi(prev.field(s));
    const Field d1xi = fd_d1(xin, g.h1());
    const Field d2xi = fd_d2_periodic(xin, g.h2());

    // div f_frak(h) term from the sources
    Field fh(g.n1, g.n2, 2);
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j) {
        const Vector6 U = bs.full_state(s, i, j);
        const double gam = std::sqrt(1.0 + U[1] * U[1] + U[2] * U[2]);
        Eigen::Matrix2d M;
        M(0, 0) = (1.0 + U[1] * U[1]) / gam;
        M(0, 1) = U[1] * U[2] / gam;
        M(1, 0) = M(0, 1);
        M(1, 1) = (1.0 + U[2] * U[2]) / gam;
        const Vector6 f = sources.eval_f(s, t_cur, g.x1(i), g.x2(j));
        const Eigen::Vector2d fH = M.inverse() * Eigen::Vector2d(f[3], f[4]);
        const StraightenEval e = bs.straighten_at(i, j);
        const double d2Psi = (s == Side::Plus) ? e.d2Psi_plus : e.d2Psi_minus;
        const double d1Phi = (s == Side::Plus) ? e.d1Phi_plus : e.d1Phi_minus;
        fh(i, j, 0) = fH[0] - fH[1] * d2Psi;
        fh(i, j, 1) = fH[1] * d1Phi;
      }
    const Field d1fh = fd_d1(fh, g.h1());
    const Field d2fh = fd_d2_periodic(fh, g.h2());

    Field resid(g.n1, g.n2, 1);
    Field sres(g.n1, g.n2, 1);
    const Field& Un = cur.field(s);
    const Field& Up = prev.field(s);
    const Field d1S = fd_d1(Un, g.h1());
    const Field d2S = fd_d2_periodic(Un, g.h2());
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j) {
        const StraightenEval e = bs.straighten_at(i, j);
        const double d1Phi = (s == Side::Plus) ? e.d1Phi_plus : e.d1Phi_minus;
        const double dtPsi = (s == Side::Plus) ? e.dtPsi_plus : e.dtPsi_minus;
        const double d2Psi = (s == Side::Plus) ? e.d2Psi_plus : e.d2Psi_minus;
        const PrimitiveState ph = bs.primitive(s, i, j);
        const double vN = ph.v[0] - ph.v[1] * d2Psi;
        const double w1 = vN - dtPsi;
        const double w2 = ph.v[1] * d1Phi;
        // xi transport
        const double dtxi = (xin(i, j, 0) - xip(i, j, 0)) / dt;
        double d1 = d1xi(i, j, 0), d2v = d2xi(i, j, 0);
        const double divfh = (d1fh(i, j, 0) + d2fh(i, j, 1)) / d1Phi;
        resid(i, j, 0) = dtxi + (w1 * d1 + w2 * d2v) / d1Phi - divfh;
        // S transport (principal part)
        const double dtS = (Un(i, j, 5) - Up(i, j, 5)) / dt;
        const Vector6 fsrc = sources.eval_f(s, t_cur, g.x1(i), g.x2(j));
        sres(i, j, 0) = dtS +
                        (w1 * d1S(i, j, 5) + w2 * d2S(i, j, 5)) / d1Phi -
                        fsrc[5];
      }
    const double rx = std::sqrt(l2sq(resid, g));
    const double rs = std::sqrt(l2sq(sres, g));
    if (s == Side::Plus)
      out.xi_plus = rx;
    else
      out.xi_minus = rx;
    out.entropy_res = std::max(out.entropy_res, rs);
  }

  // boundary pressure-equation identity (Prop-2 analogue)
  {
    std::vector<double> r(g.n2);
    for (int j = 0; j < g.n2; ++j) {
      const double d2phihat = bs.front.d2phi(j);
      const Vector6 Ub = bs.full_state(Side::Plus, 0, j);
      const double gam = std::sqrt(1.0 + Ub[1] * Ub[1] + Ub[2] * Ub[2]);
      const Vec2 vhat(Ub[1] / gam, Ub[2] / gam);
      const double vN = vhat[0] - vhat[1] * d2phihat;
      double jd1uN = 0.0;
      Vec2 jd1u = Vec2::Zero();
      double jC = 0.0, jf = 0.0;
      for (Side s : {Side::Plus, Side::Minus}) {
        const Field& U = cur.field(s);
        auto uN = [&](int i) {
          const StraightenEval e = bs.straighten_at(i, j);
          const double d2Psi = (s == Side::Plus) ? e.d2Psi_plus : e.d2Psi_minus;
          return U(i, j, 1) - U(i, j, 2) * d2Psi;
        };
        jd1uN += (-3.0 * uN(0) + 4.0 * uN(1) - uN(2)) / (2.0 * g.h1());
        for (int c = 0; c < 2; ++c)
          jd1u[c] += (-3.0 * U(0, j, 1 + c) + 4.0 * U(1, j, 1 + c) -
                      U(2, j, 1 + c)) /
                     (2.0 * g.h1());
        const NodeCoeffs nc = node_coeffs(bs, s, 0, j);
        Vector6 Uv;
        for (int c = 0; c < 6; ++c) Uv[c] = U(0, j, c);
        const double sgn = side_sign(s);
        jC += sgn * (nc.C * Uv)[0];
        jf += sgn * sources.eval_f(s, t_cur, 0.0, g.x2(j))[0];
      }
      r[j] = jd1uN - vN * vhat.dot(jd1u) + jC - jf;
    }
    out.p2_res = std::sqrt(l2sq_boundary(r, g.h2()));
  }
  return out;
}

// ---- periodic nonlinear ----------------------------------------------------

Field make_periodic_init(const Grid& grid, const PeriodicInitSpec& spec) {
  Field U(grid.n1, grid.n2, 8);
  const double k1 = 2.0 * M_PI / grid.L1;
  const double k2 = 2.0 * M_PI;
  for (int i = 0; i < grid.n1; ++i)
    for (int j = 0; j < grid.n2; ++j) {
      const double x1 = grid.x1(i), x2 = grid.x2(j);
      const double p = spec.p0 * (1.0 + spec.dp * std::sin(k1 * x1) * std::cos(k2 * x2));
      const double S = spec.S0 + spec.dS * std::cos(k1 * x1) * std::sin(k2 * x2);
      Vec3 v(spec.v_amp * std::sin(k2 * x2), spec.v_amp * std::sin(k1 * x1),
             spec.w3_v * std::sin(k2 * x2));
      // H = background + curl(psi e3), psi = dH sin(k1 x1) sin(k2 x2)
      const double H1 = spec.H01 + spec.dH * k2 * std::sin(k1 * x1) * std::cos(k2 * x2);
      const double H2 = spec.H02 - spec.dH * k1 * std::cos(k1 * x1) * std::sin(k2 * x2);
      const double H3 = spec.w3_H * std::cos(k1 * x1);
      auto [gam, u] = lorentz_extend(v);
      (void)gam;
      U(i, j, 0) = p;
      U(i, j, 1) = u[0];
      U(i, j, 2) = u[1];
      U(i, j, 3) = u[2];
      U(i, j, 4) = H1;
      U(i, j, 5) = H2;
      U(i, j, 6) = H3;
      U(i, j, 7) = S;
    }
  return U;
}

namespace {

using detail::M8;
using detail::V3;

struct Mats8 {
  Eigen::Matrix<double, 8, 8> A0, A1, A2;
};

Mats8 mats8_at(const ThermoParams& par, const double* Uv) {
  if (!(Uv[0] > 0.0))
    throw std::domain_error("nonlinear run: pressure reached p <= 0");
  const auto te = thermo_eval<double>(par, Uv[0], Uv[7]);
  const V3<double> u{Uv[1], Uv[2], Uv[3]};
  const V3<double> H{Uv[4], Uv[5], Uv[6]};
  const auto k = detail::kin_from_u<double>(u, H);
  const M8<double> A0 = detail::assemble_A0(te, k, H);
  const M8<double> A1 = detail::assemble_Aj(te, k, H, 0);
  const M8<double> A2 = detail::assemble_Aj(te, k, H, 1);
  Mats8 m;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      m.A0(r, c) = A0(r, c);
      m.A1(r, c) = A1(r, c);
      m.A2(r, c) = A2(r, c);
    }
  return m;
}

Field periodic_rhs(const ThermoParams& par, const Grid& g, const Field& U,
                   double dissipation) {
  Field out(g.n1, g.n2, 8);
  const int n1 = g.n1, n2 = g.n2;
  auto w1 = [&](int i) { return ((i % n1) + n1) % n1; };
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      double Uv[8];
      for (int c = 0; c < 8; ++c) Uv[c] = U(i, j, c);
      const Mats8 m = mats8_at(par, Uv);
      Eigen::Matrix<double, 8, 1> d1, d2;
      for (int c = 0; c < 8; ++c) {
        d1[c] = (U(w1(i + 1), j, c) - U(w1(i - 1), j, c)) / (2.0 * g.h1());
        d2[c] = (U(i, j + 1, c) - U(i, j - 1, c)) / (2.0 * g.h2());
      }
      Eigen::Matrix<double, 8, 1> rhs = -(m.A1 * d1 + m.A2 * d2);
      Eigen::LLT<Eigen::Matrix<double, 8, 8>> llt(m.A0);
      if (llt.info() != Eigen::Success)
        throw std::domain_error("nonlinear run: A0 lost positive definiteness");
      Eigen::Matrix<double, 8, 1> r = llt.solve(rhs);
      for (int c = 0; c < 8; ++c) {
        const double diss =
            (U(w1(i - 2), j, c) - 4.0 * U(w1(i - 1), j, c) + 6.0 * U(i, j, c) -
             4.0 * U(w1(i + 1), j, c) + U(w1(i + 2), j, c)) /
                (16.0 * g.h1()) +
            (U(i, j - 2, c) - 4.0 * U(i, j - 1, c) + 6.0 * U(i, j, c) -
             4.0 * U(i, j + 1, c) + U(i, j + 2, c)) /
                (16.0 * g.h2());
        r[c] -= dissipation * diss;
      }
      out.set_vec(i, j, r);
    }
  return out;
}

}  // namespace

PeriodicResult run_nonlinear_periodic(const PeriodicScenario& sc) {
  sc.params.validate();
  sc.grid.validate();
  if (!sc.grid.periodic1)
    throw std::invalid_argument("run_nonlinear_periodic: grid must be periodic");
  const Grid& g = sc.grid;
  const double floor =
      sc.pressure_floor >= 0.0 ? sc.pressure_floor : 0.75 * sc.params.pbar;

  PeriodicResult res;
  res.diag.linear = false;
  res.steps = g.steps();
  if (sc.max_steps > 0) res.steps = std::min(res.steps, sc.max_steps);
  res.dt = g.dt();

  Field U = sc.init;
  Field prev = U;
  const double dt = res.dt;
  for (int step = 0; step < res.steps; ++step) {
    prev = U;
    try {
      const Field k1 = periodic_rhs(sc.params, g, U, sc.dissipation);
      Field U1 = U;
      for (size_t n = 0; n < U1.raw().size(); ++n)
        U1.raw()[n] += dt * k1.raw()[n];
      const Field k2 = periodic_rhs(sc.params, g, U1, sc.dissipation);
      for (size_t n = 0; n < U.raw().size(); ++n)
        U.raw()[n] += 0.5 * dt * (k1.raw()[n] + k2.raw()[n]);
    } catch (const std::domain_error& e) {
      res.aborted = true;
      res.abort_reason = std::string(e.what()) + " at step " + std::to_string(step + 1);
      break;
    }

    double minp = 1e300;
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j) minp = std::min(minp, U(i, j, 0));
    if (!std::isfinite(l2sq(U, g))) {
      res.aborted = true;
      res.abort_reason = "NaN detected at step " + std::to_string(step + 1);
      break;
    }
    if (minp < floor) {
      res.aborted = true;
      res.abort_reason = "hyperbolicity loss: pressure fell below the (5.1')-style "
                         "floor at step " +
                         std::to_string(step + 1);
      break;
    }

    if ((step + 1) % sc.diag_every == 0 || step + 1 == res.steps) {
      DiagnosticsRow row;
      row.t = (step + 1) * dt;
      row.min_pressure = minp;
      double energy = 0.0, divh = 0.0, wn = 0.0, sres = 0.0;
      for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) {
          double Uv[8];
          for (int c = 0; c < 8; ++c) Uv[c] = U(i, j, c);
          const Mats8 m = mats8_at(sc.params, Uv);
          Eigen::Matrix<double, 8, 1> x;
          for (int c = 0; c < 8; ++c) x[c] = Uv[c];
          energy += x.dot(m.A0 * x);
          const int n1 = g.n1;
          auto w1i = [&](int ii) { return ((ii % n1) + n1) % n1; };
          const double d1H1 =
              (U(w1i(i + 1), j, 4) - U(w1i(i - 1), j, 4)) / (2.0 * g.h1());
          const double d2H2 = (U(i, j + 1, 5) - U(i, j - 1, 5)) / (2.0 * g.h2());
          divh += (d1H1 + d2H2) * (d1H1 + d2H2);
          const double gam = std::sqrt(1.0 + Uv[1] * Uv[1] + Uv[2] * Uv[2] +
                                       Uv[3] * Uv[3]);
          wn = std::max({wn, std::abs(Uv[3] / gam), std::abs(Uv[6])});
          // entropy transport residual
          const double dtS = (U(i, j, 7) - prev(i, j, 7)) / dt;
          const double d1S =
              (U(w1i(i + 1), j, 7) - U(w1i(i - 1), j, 7)) / (2.0 * g.h1());
          const double d2S = (U(i, j + 1, 7) - U(i, j - 1, 7)) / (2.0 * g.h2());
          const double r = dtS + (Uv[1] / gam) * d1S + (Uv[2] / gam) * d2S;
          sres += r * r;
        }
      row.sym_energy = energy * g.h1() * g.h2();
      row.div_h = std::sqrt(divh * g.h1() * g.h2());
      row.w_norm = wn;
      row.entropy_transport = std::sqrt(sres * g.h1() * g.h2());
      res.diag.rows.push_back(row);
    }
  }
  res.final_fields = U;
  return res;
}

}  // namespace rmhd
