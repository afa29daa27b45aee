#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmhd/linearized.hpp"
#include "rmhd/rng.hpp"

using namespace rmhd;

namespace {
Grid small_grid() {
  Grid g;
  g.L1 = 10.0;
  g.n1 = 41;
  g.n2 = 16;
  return g;
}
}  // namespace

TEST_CASE("good unknown: identity cases and linear-profile hand check") {
  ThermoParams par;
  const BasicState bs = make_uniform_basic_state(par, small_grid());
  const Grid& g = bs.grid;

  Field U(g.n1, g.n2, 6);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j)
      for (int c = 0; c < 6; ++c) U(i, j, c) = 0.1 * c + 0.01 * i - 0.02 * j;

  SUBCASE("zero front perturbation") {
    const auto pert = good_unknown(bs, U, U, std::vector<double>(g.n2, 0.0));
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j)
        for (int c = 0; c < 6; ++c) CHECK(pert.plus(i, j, c) == U(i, j, c));
  }

  SUBCASE("constant basic state: d1 U-hat = 0") {
    const auto pert = good_unknown(bs, U, U, std::vector<double>(g.n2, 0.3));
    for (int c = 0; c < 6; ++c) CHECK(pert.minus(5, 3, c) == U(5, 3, c));
  }
}

TEST_CASE("good unknown on a linear basic profile matches the closed form") {
  ThermoParams par;
  BasicState bs = make_rt_basic_state(par, small_grid(), 0.2);
  const Grid& g = bs.grid;
  Field U(g.n1, g.n2, 6);  // zero perturbation fields
  std::vector<double> phi(g.n2, 0.5);

  const auto pert = good_unknown(bs, U, U, phi);
  // on the chi-plateau (x1 <= 1) the plus-side pressure profile is 0.2 x1,
  // so Udot_p = 0 - (chi phi / d1Phi) * 0.2 with chi = d1Phi = 1
  for (int i = 0; i * g.h1() < 0.9; ++i)
    CHECK(pert.plus(i, 0, 0) == doctest::Approx(-0.5 * 0.2).epsilon(1e-10));

  // round trip
  Field Up2, Um2;
  PerturbationFields p2 = pert;
  good_unknown_invert(bs, p2, Up2, Um2);
  for (int i = 0; i < g.n1; ++i)
    for (int c = 0; c < 6; ++c)
      CHECK(Up2(i, 3, c) == doctest::Approx(U(i, 3, c)).epsilon(1e-13));
}

TEST_CASE("perturbation velocity") {
  CHECK(perturbation_velocity(Vec2(1.0, 0.0), Vec2(0.0, 0.0)) == Vec2(1.0, 0.0));
  const Vec2 vd = perturbation_velocity(Vec2(1.0, 0.0), Vec2(0.6, 0.0));
  CHECK(vd[0] == doctest::Approx(0.512).epsilon(1e-12));  // (1-0.36)/1.25

  // consistency with the nonlinear map v(u)
  CounterRng rng(71);
  for (int k = 0; k < 300; ++k) {
    const Vec2 vhat(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
    if (vhat.norm() > 0.8) continue;
    const double gam = 1.0 / std::sqrt(1.0 - vhat.squaredNorm());
    const Vec2 uhat = gam * vhat;
    const Vec2 ud(rng.normal(), rng.normal());
    const double eps = 1e-6;
    auto vmap = [](const Vec2& u) { return (u / std::sqrt(1.0 + u.squaredNorm())).eval(); };
    const Vec2 fd = (vmap(uhat + eps * ud) - vmap(uhat - eps * ud)) / (2.0 * eps);
    const Vec2 an = perturbation_velocity(ud, vhat);
    CHECK((an - fd).norm() <= 1e-6 * (1.0 + an.norm()));
  }
}

TEST_CASE("coefficient derivative: forward mode vs central finite differences") {
  CounterRng rng(72);
  ThermoParams par;
  for (int k = 0; k < 200; ++k) {
    const PrimitiveState st = sample_admissible_state(rng, par);
    const Vector6 U = vector6_from_primitive(st);
    Vector6 Y;
    for (int c = 0; c < 6; ++c) Y[c] = rng.normal();
    StraightenPoint sp;
    sp.dtPsi = rng.uniform(-0.3, 0.3);
    sp.d2Psi = rng.uniform(-0.3, 0.3);
    sp.d1Phi = rng.uniform(0.6, 1.4);

    const MatrixTriple t = coefficient_derivative(par, U, sp, Y);

    const double eps = 1e-6;
    auto mats_at = [&](const Vector6& Uv) {
      const PrimitiveState s2 = primitive_from_vector6(Uv);
      const MatrixSet ms = assemble(par, s2);
      struct R { Mat6 A0, A1, A2; } r;
      r.A0 = planar(ms.A0);
      r.A1 = planar(ms.A[0]);
      r.A2 = planar(ms.A[1]);
      return r;
    };
    const auto mp = mats_at(U + eps * Y);
    const auto mm = mats_at(U - eps * Y);
    const Mat6 fd0 = (mp.A0 - mm.A0) / (2.0 * eps);
    const Mat6 fd2 = (mp.A2 - mm.A2) / (2.0 * eps);
    const Mat6 fd1t =
        ((mp.A1 - sp.dtPsi * mp.A0 - sp.d2Psi * mp.A2) / sp.d1Phi -
         (mm.A1 - sp.dtPsi * mm.A0 - sp.d2Psi * mm.A2) / sp.d1Phi) /
        (2.0 * eps);
    const double scale = std::max(1.0, t.dA0.cwiseAbs().maxCoeff());
    CHECK((t.dA0 - fd0).cwiseAbs().maxCoeff() <= 1e-6 * scale);
    CHECK((t.dA2 - fd2).cwiseAbs().maxCoeff() <= 1e-6 * scale);
    CHECK((t.dA1t - fd1t).cwiseAbs().maxCoeff() <=
          1e-6 * std::max(1.0, fd1t.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("coefficient C vanishes on constant basic states and is linear in Y") {
  ThermoParams par;
  const BasicState bs = make_uniform_basic_state(par, small_grid());
  const NodeCoeffs nc = node_coeffs(bs, Side::Plus, 7, 4);
  CHECK(nc.C.cwiseAbs().maxCoeff() <= 1e-12);

  // Y = 0 gives zero through the derivative triple as well
  const Vector6 U = bs.full_state(Side::Minus, 2, 2);
  const MatrixTriple t = coefficient_derivative(par, U, StraightenPoint{}, Vector6::Zero());
  CHECK(t.dA0.cwiseAbs().maxCoeff() == 0.0);
  CHECK(t.dA1t.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("effective interior operator on analytic derivatives") {
  ThermoParams par;
  const BasicState bs = make_uniform_basic_state(par, small_grid());
  const Grid& g = bs.grid;

  // manufactured field and analytic derivatives
  Field U(g.n1, g.n2, 6), dtU(g.n1, g.n2, 6), d1U(g.n1, g.n2, 6), d2U(g.n1, g.n2, 6);
  const double t0 = 0.37;
  auto val = [&](int c, double t, double x1, double x2) {
    return 0.1 * std::sin(t + c) * std::cos(2.0 * M_PI * x2) * std::exp(-x1);
  };
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j)
      for (int c = 0; c < 6; ++c) {
        const double x1 = g.x1(i), x2 = g.x2(j);
        U(i, j, c) = val(c, t0, x1, x2);
        dtU(i, j, c) = 0.1 * std::cos(t0 + c) * std::cos(2.0 * M_PI * x2) * std::exp(-x1);
        d1U(i, j, c) = -val(c, t0, x1, x2);
        d2U(i, j, c) = -0.1 * std::sin(t0 + c) * 2.0 * M_PI *
                       std::sin(2.0 * M_PI * x2) * std::exp(-x1);
      }

  // build f := L'_e(U) with the same node matrices, then check the residual
  Field f(g.n1, g.n2, 6);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      const NodeCoeffs nc = node_coeffs(bs, Side::Plus, i, j);
      Vector6 uv, av, bv, cv;
      for (int c = 0; c < 6; ++c) {
        uv[c] = U(i, j, c);
        av[c] = dtU(i, j, c);
        bv[c] = d1U(i, j, c);
        cv[c] = d2U(i, j, c);
      }
      f.set_vec(i, j, Vector6(nc.A0 * av + nc.A1t * bv + nc.A2 * cv + nc.C * uv));
    }
  const Field resid = effective_interior_apply(bs, Side::Plus, U, dtU, d1U, d2U, &f);
  double worst = 0.0;
  for (double v : resid.raw()) worst = std::max(worst, std::abs(v));
  CHECK(worst <= 1e-12);
}

TEST_CASE("dropped zeroth-order terms vanish on constant basic states") {
  ThermoParams par;
  const BasicState bs = make_uniform_basic_state(par, small_grid());
  const Field d = dropped_zeroth_order_terms(bs, Side::Plus,
                                             std::vector<double>(bs.grid.n2, 0.4));
  double worst = 0.0;
  for (double v : d.raw()) worst = std::max(worst, std::abs(v));
  CHECK(worst <= 1e-12);

  // and are generically nonzero when the basic state does not solve the system
  const BasicState rt = make_rt_basic_state(par, small_grid(), 0.3);
  const Field d2 = dropped_zeroth_order_terms(rt, Side::Plus,
                                              std::vector<double>(rt.grid.n2, 0.4));
  double mx = 0.0;
  for (double v : d2.raw()) mx = std::max(mx, std::abs(v));
  CHECK(mx > 1e-6);
}

TEST_CASE("boundary operator rows") {
  ThermoParams par;
  const BasicState bs = make_rt_basic_state(par, small_grid(), 0.25);
  const Grid& g = bs.grid;

  SUBCASE("zero perturbation gives zero rows") {
    PerturbationFields pert = PerturbationFields::zero(g);
    const auto rows =
        boundary_operator_apply(bs, pert, std::vector<double>(g.n2, 0.0));
    CHECK(rows.cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("front-only perturbation exposes the jump coefficients") {
    PerturbationFields pert = PerturbationFields::zero(g);
    for (int j = 0; j < g.n2; ++j) pert.phi[j] = 1.0;
    const auto rows =
        boundary_operator_apply(bs, pert, std::vector<double>(g.n2, 0.0));
    for (int j = 0; j < g.n2; ++j) {
      CHECK(rows(0, j) == doctest::Approx(0.5).epsilon(1e-6));  // [d1 p-hat] = 2*0.25
      CHECK(rows(1, j) == 0.0);
      CHECK(rows(2, j) == 0.0);
      CHECK(rows(3, j) == doctest::Approx(0.0).epsilon(1e-10));  // [d1 H-tau] = 0
      CHECK(rows(4, j) == doctest::Approx(0.0).epsilon(1e-10));  // d1 v_N-hat = 0
    }
  }

  SUBCASE("constant basic state reduces row 1 to [p-dot]") {
    const BasicState ubs = make_uniform_basic_state(par, small_grid());
    PerturbationFields pert = PerturbationFields::zero(g);
    for (int j = 0; j < g.n2; ++j) {
      pert.plus(0, j, 0) = 0.7;
      pert.minus(0, j, 0) = 0.2;
      pert.phi[j] = 3.0;  // multiplies [d1 p-hat] = 0
    }
    const auto rows =
        boundary_operator_apply(ubs, pert, std::vector<double>(g.n2, 0.0));
    for (int j = 0; j < g.n2; ++j)
      CHECK(rows(0, j) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("boundary quadratic form: two-path identity") {
  CounterRng rng(73);
  ThermoParams par;
  double worst = 0.0, worst_qf2 = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ContactSample cs = sample_contact_pair(rng, par);
    Vector6 Udp, Udm;
    for (int c = 0; c < 6; ++c) {
      Udp[c] = rng.normal();
      Udm[c] = rng.normal();
    }
    // common u-dot ([u-dot] = 0)
    Udm[1] = Udp[1];
    Udm[2] = Udp[2];
    const auto qf = boundary_quadratic_form(par, cs.right, cs.left, cs.d2phi,
                                            cs.dtphi, Udp, Udm);
    worst = std::max(worst,
                     std::abs(qf.direct - qf.reduced) / std::max(1.0, std::abs(qf.direct)));

    // impose [H_N-dot] = 0: the reduced form must agree and carry only the
    // (1 - sigma^2) coefficient
    Vector6 Udm2 = Udm;
    const double HdNp = Udp[3] - Udp[4] * cs.d2phi;
    // solve H1m - H2m d2phi = HdNp keeping H2m
    Udm2[3] = HdNp + Udm2[4] * cs.d2phi;
    const auto qf2 = boundary_quadratic_form(par, cs.right, cs.left, cs.d2phi,
                                             cs.dtphi, Udp, Udm2);
    worst_qf2 = std::max(
        worst_qf2, std::abs(qf2.direct - qf2.reduced) / std::max(1.0, std::abs(qf2.direct)));
  }
  CHECK(worst <= 1e-10);
  CHECK(worst_qf2 <= 1e-10);
}

TEST_CASE("boundary quadratic form: homogeneous jumps give exactly zero") {
  ThermoParams par;
  CounterRng rng(74);
  const ContactSample cs = sample_contact_pair(rng, par);
  Vector6 Ud;
  for (int c = 0; c < 6; ++c) Ud[c] = rng.normal();
  const auto qf =
      boundary_quadratic_form(par, cs.right, cs.left, cs.d2phi, cs.dtphi, Ud, Ud);
  CHECK(qf.reduced == 0.0);
  CHECK(std::abs(qf.direct) <= 1e-12 * (1.0 + Ud.squaredNorm()));
}

TEST_CASE("boundary quadratic form rejects non-contact traces") {
  ThermoParams par;
  PrimitiveState a, b;
  a.H = b.H = Vec3(1.0, 0.0, 0.0);
  b.p = 2.0;
  CHECK_THROWS_AS(boundary_quadratic_form(par, a, b, 0.0, 0.0, Vector6::Zero(),
                                          Vector6::Zero()),
                  std::invalid_argument);
}

TEST_CASE("lift: zero data gives zero traces; manufactured g6 transport converges") {
  ThermoParams par;
  UniformStateSpec spec;
  spec.v2 = 0.35;
  SUBCASE("zero sources") {
    const BasicState bs = make_uniform_basic_state(par, small_grid(), spec);
    LiftState lift(bs, Sources{});
    const std::vector<double> g6(bs.grid.n2, 0.0);
    CHECK(lift.fH_jump(0.5, 3) == 0.0);
    CHECK(lift.boundary_trace(Side::Minus, 2, 0.5, g6).cwiseAbs().maxCoeff() == 0.0);
    const auto r = lift.g6_rhs(0.5, g6);
    for (double v : r) CHECK(v == 0.0);
  }

  SUBCASE("manufactured transport solution") {
    // prescribe g6*(t, x2) = sin(t) cos(2 pi (x2 - 0.1)); with v2-hat constant
    // the residual source is dt g6* + v2 d2 g6*; feed it via the plus-side
    // H-row sources so that [f_H . N-hat] equals it exactly.
    const double v2 = spec.v2;
    auto g6star = [&](double t, double x2) {
      return std::sin(t) * std::cos(2.0 * M_PI * (x2 - 0.1));
    };
    auto rstar = [&](double t, double x2) {
      return std::cos(t) * std::cos(2.0 * M_PI * (x2 - 0.1)) -
             v2 * std::sin(t) * 2.0 * M_PI * std::sin(2.0 * M_PI * (x2 - 0.1));
    };
    double prev_err = -1.0;
    for (int n2 : {32, 64, 128}) {
      Grid g;
      g.L1 = 10.0;
      g.n1 = 11;
      g.n2 = n2;
      const BasicState bs = make_uniform_basic_state(par, g, spec);
      // Mcal at the boundary trace (same for all j)
      const Vector6 Ub = bs.full_state(Side::Plus, 0, 0);
      const double gam = std::sqrt(1.0 + Ub[1] * Ub[1] + Ub[2] * Ub[2]);
      Eigen::Matrix2d M;
      M(0, 0) = (1.0 + Ub[1] * Ub[1]) / gam;
      M(0, 1) = Ub[1] * Ub[2] / gam;
      M(1, 0) = M(0, 1);
      M(1, 1) = (1.0 + Ub[2] * Ub[2]) / gam;
      Sources src;
      src.f = [&, M](Side s, double t, double x1, double x2) {
        Vector6 f = Vector6::Zero();
        if (s == Side::Plus && x1 == 0.0) {
          const Eigen::Vector2d fh = M * Eigen::Vector2d(rstar(t, x2), 0.0);
          f[3] = fh[0];
          f[4] = fh[1];
        }
        return f;
      };
      LiftState lift(bs, src);
      std::vector<double> g6(n2, 0.0);
      const double T = 1.0, dt = 0.2 / n2;
      const int steps = static_cast<int>(std::round(T / dt));
      for (int s = 0; s < steps; ++s) {
        const double t = s * dt;
        const auto k1 = lift.g6_rhs(t, g6);
        std::vector<double> mid(n2);
        for (int j = 0; j < n2; ++j) mid[j] = g6[j] + dt * k1[j];
        const auto k2 = lift.g6_rhs(t + dt, mid);
        for (int j = 0; j < n2; ++j) g6[j] += 0.5 * dt * (k1[j] + k2[j]);
      }
      double err = 0.0;
      for (int j = 0; j < n2; ++j)
        err = std::max(err, std::abs(g6[j] - g6star(T, g.x2(j))));
      if (prev_err > 0.0) CHECK(prev_err / err > 3.3);  // ~2nd order
      prev_err = err;
    }
  }
}
