#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmhd/basic_state.hpp"

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

TEST_CASE("uniform basic state passes every audit condition except (RTL)") {
  ThermoParams par;
  const BasicState bs = make_uniform_basic_state(par, small_grid());
  const AuditReport rep = audit_basic_state(bs);
  CHECK(rep.hard_pass);
  CHECK_FALSE(rep.rt_pass);  // constant pressure: [d1 p] = 0 < eps/2
  const AuditEntry* rt = rep.find("(RTL)");
  REQUIRE(rt != nullptr);
  CHECK(rt->margin == doctest::Approx(-0.5 * par.epsilon).epsilon(1e-10));
}

TEST_CASE("RT preset restores the sign condition with the expected margin") {
  ThermoParams par;
  const double slope = 0.3;
  const BasicState bs = make_rt_basic_state(par, small_grid(), slope);
  const AuditReport rep = audit_basic_state(bs);
  CHECK(rep.hard_pass);
  CHECK(rep.rt_pass);
  const AuditEntry* rt = rep.find("(RTL)");
  REQUIRE(rt != nullptr);
  // [d1 p] = 2 * slope at the boundary, margin 0.6 - eps/2
  CHECK(rt->margin == doctest::Approx(2.0 * slope - 0.5 * par.epsilon).epsilon(1e-6));
}

TEST_CASE("curved-front preset satisfies the boundary equalities") {
  ThermoParams par;
  const BasicState bs = make_curved_front_basic_state(par, small_grid(), 0.05);
  const AuditReport rep = audit_basic_state(bs);
  CHECK(rep.hard_pass);
  CHECK_FALSE(rep.warn_phi_above_half);

  const BasicState big = make_curved_front_basic_state(par, small_grid(), 0.7);
  CHECK(audit_basic_state(big).warn_phi_above_half);
}

TEST_CASE("magnetic-normal margin failure is detected") {
  ThermoParams par;
  UniformStateSpec spec;
  spec.H1 = 0.25 * par.kappa;  // |H_N| = kappa/4 < kappa/2
  spec.H2 = 0.0;
  const BasicState bs = make_uniform_basic_state(par, small_grid(), spec);
  const AuditReport rep = audit_basic_state(bs);
  CHECK_FALSE(rep.hard_pass);
  const AuditEntry* e = rep.find("(cdass)");
  REQUIRE(e != nullptr);
  CHECK_FALSE(e->pass);
  CHECK(e->margin == doctest::Approx(-0.25 * par.kappa).epsilon(1e-10));
}

TEST_CASE("state conversions at a node") {
  ThermoParams par;
  UniformStateSpec spec;
  spec.v2 = 0.6;
  const BasicState bs = make_uniform_basic_state(par, small_grid(), spec);
  const Vector6 U = bs.full_state(Side::Plus, 3, 5);
  CHECK(U[0] == doctest::Approx(par.pbar + spec.p_hat));
  CHECK(U[5] == doctest::Approx(spec.S_plus + bs.Sbar_plus));
  const PrimitiveState st = bs.primitive(Side::Plus, 3, 5);
  CHECK(st.v[1] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(st.v[0] == 0.0);
  // u-form round trip
  const Vector6 back = vector6_from_primitive(st);
  for (int c = 0; c < 6; ++c) CHECK(back[c] == doctest::Approx(U[c]).epsilon(1e-12));
}

TEST_CASE("entropy-jump basic state from reference values") {
  // piecewise-constant shifted state (0, 0, (1,0), +-1) over a flat front
  ThermoParams par;
  UniformStateSpec spec;
  spec.p_hat = 0.0;
  spec.v2 = 0.0;
  spec.H1 = 1.0;
  spec.H2 = 0.0;
  spec.S_plus = 1.0;
  spec.S_minus = -1.0;
  const BasicState bs = make_uniform_basic_state(par, small_grid(), spec);
  const AuditReport rep = audit_basic_state(bs);
  CHECK(rep.hard_pass);   // entropy may jump: not a boundary equality
  CHECK_FALSE(rep.rt_pass);
}

TEST_CASE("normal and tangential traces on a curved front") {
  ThermoParams par;
  UniformStateSpec spec;
  spec.H1 = 1.0;
  spec.H2 = 0.5;
  const BasicState bs = make_curved_front_basic_state(par, small_grid(), 0.04, spec);
  for (int j = 0; j < bs.grid.n2; ++j) {
    const double d2 = bs.front.d2phi(j);
    CHECK(bs.HN(Side::Plus, 0, j) == doctest::Approx(1.0 - 0.5 * d2).epsilon(1e-12));
  }
  // deep in the interior the cutoff kills the front contribution
  CHECK(bs.HN(Side::Plus, bs.grid.n1 - 1, 3) == doctest::Approx(1.0));
}
