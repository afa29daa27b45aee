#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmhd/eos.hpp"
#include "rmhd/rng.hpp"

using namespace rmhd;

namespace {
ThermoParams gas(double gamma = 4.0 / 3.0) {
  ThermoParams p;
  p.gamma = gamma;
  return p;
}
}  // namespace

TEST_CASE("density from p,S") {
  CHECK(density_from_p_S(gas(), 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(density_from_p_S(gas(2.0), 4.0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
  // p = 1, S = 0 gives rho = A for any gamma
  for (double g : {1.1, 1.5, 2.0})
    CHECK(density_from_p_S(gas(g), 1.0, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(density_from_p_S(gas(), -1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(density_from_p_S(gas(), 0.0, 0.0), std::domain_error);
}

TEST_CASE("internal energy, enthalpy, sound speed at reference points") {
  CHECK(internal_energy(gas(), 1.0, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(internal_energy(gas(2.0), 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(internal_energy(gas(), 1e-12, 1.0) < 1e-11);

  CHECK(enthalpy(gas(), 1.0, 1.0) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(enthalpy(gas(2.0), 1.0, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(enthalpy(gas(), 1e-12, 1.0) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK(sound_speed_sq(gas(), 1.0, 1.0) ==
        doctest::Approx(4.0 / 15.0).epsilon(1e-14));
  CHECK(sound_speed_sq(gas(2.0), 1.0, 1.0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(sound_speed_sq(gas(), 1e-12, 1.0) < 1e-11);
}

TEST_CASE("EOS round trip p -> rho -> p") {
  CounterRng rng(11);
  for (int k = 0; k < 2000; ++k) {
    ThermoParams par = gas(rng.uniform(1.05, 2.0));
    par.A = rng.uniform(0.5, 2.0);
    const double p = rng.uniform(1e-3, 10.0);
    const double S = rng.uniform(-2.0, 2.0);
    const double rho = density_from_p_S(par, p, S);
    CHECK(pressure_from_rho_S(par, rho, S) == doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("a^2 = gamma p / rho matches finite differences of the inverted EOS") {
  CounterRng rng(12);
  for (int k = 0; k < 500; ++k) {
    ThermoParams par = gas(rng.uniform(1.05, 2.0));
    const double p = rng.uniform(0.1, 5.0);
    const double S = rng.uniform(-1.0, 1.0);
    const double rho = density_from_p_S(par, p, S);
    const double d = 1e-5 * rho;
    const double fd = (pressure_from_rho_S(par, rho + d, S) -
                       pressure_from_rho_S(par, rho - d, S)) /
                      (2.0 * d);
    CHECK(fd == doctest::Approx(par.gamma * p / rho).epsilon(1e-6));
  }
}

TEST_CASE("causality holds on the admissible domain") {
  CounterRng rng(13);
  for (int k = 0; k < 100000; ++k) {
    ThermoParams par = gas(rng.uniform(1.05, 2.0));
    const double p = rng.uniform(1e-4, 50.0);
    const double rho = density_from_p_S(par, p, rng.uniform(-2.0, 2.0));
    const double cs2 = sound_speed_sq(par, p, rho);
    CHECK(cs2 > 0.0);
    CHECK(cs2 < 1.0);
  }
}

TEST_CASE("causality boundary: h - a^2 has the sign of 1 + gamma(2-gamma)p/((gamma-1)rho)") {
  // Both expressions certify c_s^2 < 1; their verdicts must agree, including
  // for gamma > 2 where violation becomes possible.
  CounterRng rng(14);
  for (int k = 0; k < 20000; ++k) {
    ThermoParams par = gas(rng.uniform(1.05, 3.0));
    par.allow_gamma_above_two = true;
    const double p = rng.uniform(1e-3, 50.0);
    const double rho = density_from_p_S(par, p, rng.uniform(-1.0, 1.0));
    const double h = enthalpy(par, p, rho);
    const double a2 = par.gamma * p / rho;
    const double reduced = 1.0 + par.gamma * (2.0 - par.gamma) * p / ((par.gamma - 1.0) * rho);
    CHECK(((h - a2 > 0.0) == (reduced > 0.0)));
    CHECK(((a2 / h < 1.0) == (reduced > 0.0)));
  }
}

TEST_CASE("hyperbolicity report") {
  ThermoParams par = gas();
  PrimitiveState st;
  st.p = 1.0;
  CHECK(hyperbolicity_report(par, st).admissible());

  st.p = -1.0;
  auto rep = hyperbolicity_report(par, st);
  CHECK_FALSE(rep.positive_pressure);
  CHECK_FALSE(rep.admissible());
  CHECK(rep.describe().find("(9')") != std::string::npos);

  st.p = 1.0;
  st.v = Vec3(0.99, 0.0, 0.0);
  rep = hyperbolicity_report(par, st);
  CHECK_FALSE(rep.light_speed);
  CHECK(rep.light_speed_margin == doctest::Approx(0.01 - 0.05));
}

TEST_CASE("parameter validation and gamma override") {
  ThermoParams par = gas(2.5);
  CHECK_THROWS_AS(par.validate(), std::invalid_argument);
  par.allow_gamma_above_two = true;
  CHECK_NOTHROW(par.validate());
  // the report still flags gamma > 2
  CHECK_FALSE(hyperbolicity_report(par, PrimitiveState{}).gamma_in_range);

  ThermoParams bad = gas();
  bad.pbar = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
