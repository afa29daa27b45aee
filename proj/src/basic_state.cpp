#include "rmhd/basic_state.hpp"

#include <cmath>
#include <sstream>

namespace rmhd {

Vector6 BasicState::full_state(Side s, int i, int j) const {
  const Field& f = field(s);
  Vector6 U;
  for (int c = 0; c < 6; ++c) U[c] = f(i, j, c);
  U[0] += params.pbar;
  U[5] += sbar(s);
  return U;
}

PrimitiveState primitive_from_vector6(const Vector6& U) {
  PrimitiveState st;
  st.p = U[0];
  st.v = velocity_from_u(Vec3(U[1], U[2], 0.0));
  st.H = Vec3(U[3], U[4], 0.0);
  st.S = U[5];
  return st;
}

Vector6 vector6_from_primitive(const PrimitiveState& st) {
  auto [gamma, u] = lorentz_extend(st.v);
  (void)gamma;
  Vector6 U;
  U << st.p, u[0], u[1], st.H[0], st.H[1], st.S;
  return U;
}

PrimitiveState BasicState::primitive(Side s, int i, int j) const {
  return primitive_from_vector6(full_state(s, i, j));
}

StraightenEval BasicState::straighten_at(int i, int j) const {
  return straighten(front, grid.x1(i), j, cutoff_kind);
}

double BasicState::d2psi(Side s, int i, int j) const {
  const double c = cutoff(side_sign(s) * grid.x1(i), cutoff_kind);
  return c * front.d2phi(j);
}

double BasicState::HN(Side s, int i, int j) const {
  const Vector6 U = full_state(s, i, j);
  return U[3] - U[4] * d2psi(s, i, j);
}

double BasicState::vN(Side s, int i, int j) const {
  const PrimitiveState st = primitive(s, i, j);
  return st.v[0] - st.v[1] * d2psi(s, i, j);
}

double BasicState::d1_at_boundary(Side s, int j, int c) const {
  const Field& f = field(s);
  const double h = grid.h1();
  return (-3.0 * f(0, j, c) + 4.0 * f(1, j, c) - f(2, j, c)) / (2.0 * h);
}

const AuditEntry* AuditReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.condition.rfind(name, 0) == 0) return &e;
  return nullptr;
}

std::string AuditReport::describe() const {
  std::ostringstream os;
  for (const auto& e : entries)
    os << (e.pass ? "  pass  " : "  FAIL  ") << e.condition << "  (margin "
       << e.margin << ")\n";
  if (warn_phi_above_half)
    os << "  warn  ||phi||_inf > 1/2 (admissible but outside the usual "
          "initial-data normalization)\n";
  os << (pass_all() ? "basic state admissible\n"
                    : (hard_pass ? "basic state admissible except (RTL)\n"
                                 : "basic state INADMISSIBLE\n"));
  return os.str();
}

namespace {

// v from a 6-vector in u-form without the EOS gate.
Vec2 planar_velocity(const Vector6& U) {
  const double g = std::sqrt(1.0 + U[1] * U[1] + U[2] * U[2]);
  return Vec2(U[1] / g, U[2] / g);
}

}  // namespace

AuditReport audit_basic_state(const BasicState& bs, const AuditOptions& opts) {
  const Grid& g = bs.grid;
  const double fd_tol =
      opts.fd_tol > 0.0 ? opts.fd_tol
                        : 10.0 * std::pow(std::max(g.h1(), g.h2()), 2);
  AuditReport rep;
  auto add = [&rep](std::string name, double margin) {
    rep.entries.push_back({std::move(name), margin >= 0.0, margin});
  };

  // (fi) front bound
  const double phimax = bs.front.max_abs();
  add("(fi) ||phi||_inf <= 1", 1.0 - phimax);
  rep.warn_phi_above_half = phimax > 0.5 && phimax <= 1.0;

  // interior sweeps
  double min_p = 1e300, min_ls = 1e300;
  double max_div = 0.0;
  for (Side s : {Side::Plus, Side::Minus}) {
    const Field& f = bs.field(s);
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j) {
        min_p = std::min(min_p, f(i, j, 0));  // shifted pressure
        const Vec2 v = planar_velocity(bs.full_state(s, i, j));
        min_ls = std::min(min_ls, 1.0 - v.norm());
      }
    // div frak(h) = d1(H_N) + d2(H2 * d1Phi) on the initial slice
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j) {
        auto hn = [&](int ii, int jj) { return bs.HN(s, ii, jj); };
        auto h2p = [&](int ii, int jj) {
          const StraightenEval e = bs.straighten_at(ii, jj);
          const double d1phi =
              s == Side::Plus ? e.d1Phi_plus : e.d1Phi_minus;
          return bs.full_state(s, ii, jj)[4] * d1phi;
        };
        double d1;
        if (i == 0)
          d1 = (-3.0 * hn(0, j) + 4.0 * hn(1, j) - hn(2, j)) / (2.0 * g.h1());
        else if (i == g.n1 - 1)
          d1 = (3.0 * hn(i, j) - 4.0 * hn(i - 1, j) + hn(i - 2, j)) / (2.0 * g.h1());
        else
          d1 = (hn(i + 1, j) - hn(i - 1, j)) / (2.0 * g.h1());
        const double d2 = (h2p(i, j + 1) - h2p(i, j - 1)) / (2.0 * g.h2());
        max_div = std::max(max_div, std::abs(d1 + d2));
      }
  }
  add("(a5) shifted pressure p >= -pbar/2", min_p + 0.5 * bs.params.pbar);
  add("(ls) 1 - |v| >= nu/2", min_ls - 0.5 * bs.params.nu);

  // boundary equalities (a12') and margins
  double max_jp = 0.0, max_jv = 0.0, max_jH = 0.0, max_front = 0.0;
  double min_hn = 1e300;
  double max_jd1v = 0.0, max_jd1hn = 0.0, max_jhn = 0.0;
  double min_rt = 1e300;
  for (int j = 0; j < g.n2; ++j) {
    const Vector6 Up = bs.full_state(Side::Plus, 0, j);
    const Vector6 Um = bs.full_state(Side::Minus, 0, j);
    max_jp = std::max(max_jp, std::abs(Up[0] - Um[0]));
    const Vec2 vp = planar_velocity(Up), vm = planar_velocity(Um);
    max_jv = std::max(max_jv, (vp - vm).norm());
    max_jH = std::max(max_jH,
                      std::max(std::abs(Up[3] - Um[3]), std::abs(Up[4] - Um[4])));
    const double vN = vp[0] - vp[1] * bs.front.d2phi(j);
    max_front = std::max(max_front, std::abs(bs.front.dtphi(j) - vN));
    min_hn = std::min({min_hn, std::abs(bs.HN(Side::Plus, 0, j)),
                       std::abs(bs.HN(Side::Minus, 0, j))});
    max_jhn =
        std::max(max_jhn, std::abs(bs.HN(Side::Plus, 0, j) - bs.HN(Side::Minus, 0, j)));

    // normal-derivative jumps (sum convention), differencing the v-values
    auto vat = [&](Side s, int i) {
      return planar_velocity(bs.full_state(s, i, j));
    };
    const Vec2 d1vp =
        (-3.0 * vat(Side::Plus, 0) + 4.0 * vat(Side::Plus, 1) - vat(Side::Plus, 2)) /
        (2.0 * g.h1());
    const Vec2 d1vm = (-3.0 * vat(Side::Minus, 0) + 4.0 * vat(Side::Minus, 1) -
                       vat(Side::Minus, 2)) /
                      (2.0 * g.h1());
    max_jd1v = std::max(max_jd1v, (d1vp + d1vm).cwiseAbs().maxCoeff());
    auto hnat = [&](Side s, int i) { return bs.HN(s, i, j); };
    const double d1hnp =
        (-3.0 * hnat(Side::Plus, 0) + 4.0 * hnat(Side::Plus, 1) - hnat(Side::Plus, 2)) /
        (2.0 * g.h1());
    const double d1hnm = (-3.0 * hnat(Side::Minus, 0) + 4.0 * hnat(Side::Minus, 1) -
                          hnat(Side::Minus, 2)) /
                         (2.0 * g.h1());
    max_jd1hn = std::max(max_jd1hn, std::abs(d1hnp + d1hnm));

    const double rt = bs.d1_at_boundary(Side::Plus, j, 0) +
                      bs.d1_at_boundary(Side::Minus, j, 0);
    min_rt = std::min(min_rt, rt);
  }
  add("(a12') [p] = 0", opts.eq_tol - max_jp);
  add("(a12') [v] = 0", opts.eq_tol - max_jv);
  add("(a12') [H] = 0", opts.eq_tol - max_jH);
  add("(a12') dtphi = v_N^+", opts.eq_tol - max_front);
  add("(cdass) |H_N| >= kappa/2", min_hn - 0.5 * bs.params.kappa);
  add("(jc1') [d1 v] = 0", fd_tol - max_jd1v);
  add("(jc1') [d1 H_N] = 0", fd_tol - max_jd1hn);
  add("(14.1) div frak(h) = 0", fd_tol - max_div);
  add("(15.1) [H_N] = 0", opts.eq_tol - max_jhn);
  add("(RTL) [d1 p] >= epsilon/2", min_rt - 0.5 * bs.params.epsilon);

  // (a22) crude W^2_inf surrogate: values plus first finite differences
  double norm_surrogate = phimax;
  for (Side s : {Side::Plus, Side::Minus}) {
    const Field& f = bs.field(s);
    for (int i = 0; i + 1 < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j)
        for (int c = 0; c < 6; ++c) {
          norm_surrogate = std::max(norm_surrogate, std::abs(f(i, j, c)));
          norm_surrogate = std::max(
              norm_surrogate, std::abs(f(i + 1, j, c) - f(i, j, c)) / g.h1());
        }
  }
  add("(a22) norm bound <= K", bs.bound_K - norm_surrogate);

  rep.hard_pass = true;
  for (const auto& e : rep.entries) {
    if (e.condition.rfind("(RTL)", 0) == 0)
      rep.rt_pass = e.pass;
    else
      rep.hard_pass = rep.hard_pass && e.pass;
  }
  return rep;
}

namespace {

BasicState base_uniform(const ThermoParams& par, const Grid& grid,
                        const UniformStateSpec& spec) {
  par.validate();
  grid.validate();
  BasicState bs;
  bs.params = par;
  bs.grid = grid;
  bs.front = FrontFunction::zero(grid.n2);
  bs.Sbar_plus = 0.1;
  bs.Sbar_minus = -0.1;
  bs.plus = Field(grid.n1, grid.n2, 6);
  bs.minus = Field(grid.n1, grid.n2, 6);
  const double g = 1.0 / std::sqrt(1.0 - spec.v2 * spec.v2);
  for (int i = 0; i < grid.n1; ++i)
    for (int j = 0; j < grid.n2; ++j) {
      for (Side s : {Side::Plus, Side::Minus}) {
        Field& f = bs.field(s);
        f(i, j, 0) = spec.p_hat;
        f(i, j, 1) = 0.0;
        f(i, j, 2) = g * spec.v2;
        f(i, j, 3) = spec.H1;
        f(i, j, 4) = spec.H2;
        f(i, j, 5) = (s == Side::Plus ? spec.S_plus : spec.S_minus);
      }
    }
  return bs;
}

}  // namespace

BasicState make_uniform_basic_state(const ThermoParams& par, const Grid& grid,
                                    const UniformStateSpec& spec) {
  return base_uniform(par, grid, spec);
}

BasicState make_rt_basic_state(const ThermoParams& par, const Grid& grid,
                               double slope, const UniformStateSpec& spec) {
  BasicState bs = base_uniform(par, grid, spec);
  for (int i = 0; i < grid.n1; ++i) {
    const double x1 = grid.x1(i);
    const double prof = slope * x1 * cutoff(x1, bs.cutoff_kind);
    for (int j = 0; j < grid.n2; ++j) {
      bs.plus(i, j, 0) += prof;
      bs.minus(i, j, 0) += prof;
    }
  }
  return bs;
}

BasicState make_curved_front_basic_state(const ThermoParams& par, const Grid& grid,
                                         double amp, const UniformStateSpec& spec) {
  BasicState bs = base_uniform(par, grid, spec);
  std::vector<double> phi(grid.n2), dtphi(grid.n2);
  for (int j = 0; j < grid.n2; ++j)
    phi[j] = amp * std::cos(2.0 * M_PI * grid.x2(j));
  FrontFunction f0(phi);
  for (int j = 0; j < grid.n2; ++j) dtphi[j] = 0.0 - spec.v2 * f0.d2phi(j);
  bs.front = FrontFunction(phi, dtphi);
  return bs;
}

}  // namespace rmhd
