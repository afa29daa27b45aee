#include "rmhd/jumps.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rmhd/kinematics.hpp"

namespace rmhd {

FrontGeometry FrontGeometry::from_slopes(double dtphi, double d2phi, double d3phi) {
  FrontGeometry g;
  g.norm = std::sqrt(1.0 + d2phi * d2phi + d3phi * d3phi);
  g.n = Vec3(1.0, -d2phi, -d3phi) / g.norm;
  g.tau1 = Vec3(d2phi, 1.0, 0.0);
  g.tau2 = Vec3(d3phi, 0.0, 1.0);
  g.sigma = dtphi / g.norm;
  return g;
}

double JumpResiduals::max_abs() const {
  return std::max({std::abs(r10), std::abs(r11), r12.cwiseAbs().maxCoeff(),
                   std::abs(r13), r14.cwiseAbs().maxCoeff(), std::abs(r15)});
}

const char* to_string(DiscontinuityClass c) {
  switch (c) {
    case DiscontinuityClass::Contact: return "Contact";
    case DiscontinuityClass::Shock: return "Shock";
    case DiscontinuityClass::CurrentVortexSheet: return "CurrentVortexSheet";
    case DiscontinuityClass::Alfven: return "Alfven";
    case DiscontinuityClass::NotADiscontinuity: return "NotADiscontinuity";
  }
  return "?";
}

namespace {

/// Per-side quantities entering (10)-(15).
struct SideEval {
  double rho, h, G, q, vn, Hn, j;
  Vec2 vt, Ht;
  Vec3 v, H;
  double vdH, H2;
};

SideEval eval_side(const ThermoParams& par, const PrimitiveState& st,
                   const FrontGeometry& g) {
  const Kinematics k = full_kinematics(par, st);
  SideEval e;
  e.rho = k.rho;
  e.h = k.h;
  e.G = k.gamma_lorentz;
  e.q = k.q;
  e.v = st.v;
  e.H = st.H;
  e.vn = st.v.dot(g.n);
  e.Hn = st.H.dot(g.n);
  e.vt = Vec2(st.v.dot(g.tau1), st.v.dot(g.tau2));
  e.Ht = Vec2(st.H.dot(g.tau1), st.H.dot(g.tau2));
  e.j = e.rho * e.G * (e.vn - g.sigma);
  e.vdH = st.v.dot(st.H);
  e.H2 = st.H.squaredNorm();
  return e;
}

}  // namespace

double mass_flux(const ThermoParams& par, const PrimitiveState& state,
                 const FrontGeometry& geom) {
  return eval_side(par, state, geom).j;
}

JumpResiduals rh_residuals(const ThermoParams& par, const PrimitiveState& left,
                           const PrimitiveState& right, const FrontGeometry& g) {
  const SideEval L = eval_side(par, left, g);
  const SideEval R = eval_side(par, right, g);
  const double j = 0.5 * (L.j + R.j);
  const double Hn = 0.5 * (L.Hn + R.Hn);

  JumpResiduals r;
  r.r10 = R.j - L.j;
  auto jump = [](double a, double b) { return b - a; };
  r.r11 = j * jump((L.h * L.G + L.H2 / (L.rho * L.G)) * L.vn +
                       L.vdH / (L.rho * L.G) * L.Hn,
                   (R.h * R.G + R.H2 / (R.rho * R.G)) * R.vn +
                       R.vdH / (R.rho * R.G) * R.Hn) -
          Hn * jump(L.Hn / (L.G * L.G) + L.vdH * L.vn,
                    R.Hn / (R.G * R.G) + R.vdH * R.vn) +
          jump(L.q, R.q);
  for (int i = 0; i < 2; ++i) {
    r.r12[i] = j * jump((L.h * L.G + L.H2 / (L.rho * L.G)) * L.vt[i] +
                            L.vdH / (L.rho * L.G) * L.Ht[i],
                        (R.h * R.G + R.H2 / (R.rho * R.G)) * R.vt[i] +
                            R.vdH / (R.rho * R.G) * R.Ht[i]) -
               Hn * jump(L.Ht[i] / (L.G * L.G) + L.vdH * L.vt[i],
                         R.Ht[i] / (R.G * R.G) + R.vdH * R.vt[i]);
    r.r14[i] = j * jump(L.Ht[i] / (L.rho * L.G), R.Ht[i] / (R.rho * R.G)) -
               Hn * jump(L.vt[i], R.vt[i]);
  }
  r.r13 = R.Hn - L.Hn;
  r.r15 = j * jump(L.h * L.G + L.H2 + L.q / (L.rho * L.G),
                   R.h * R.G + R.H2 + R.q / (R.rho * R.G)) +
          Hn * jump(L.vdH, R.vdH) + jump(L.vn * L.q, R.vn * R.q);
  return r;
}

DiscontinuityClass classify(const ThermoParams& par, const PrimitiveState& left,
                            const PrimitiveState& right, const FrontGeometry& g,
                            double tol) {
  const SideEval L = eval_side(par, left, g);
  const SideEval R = eval_side(par, right, g);
  const double scale =
      std::max({1.0, std::abs(L.q), std::abs(R.q), L.rho, R.rho, L.h, R.h});
  if (rh_residuals(par, left, right, g).max_abs() > tol * scale)
    return DiscontinuityClass::NotADiscontinuity;
  const double j = 0.5 * (L.j + R.j);
  const double Hn = 0.5 * (L.Hn + R.Hn);
  if (std::abs(j) <= tol * scale) {
    return std::abs(Hn) > tol * scale ? DiscontinuityClass::Contact
                                      : DiscontinuityClass::CurrentVortexSheet;
  }
  return std::abs(R.rho - L.rho) > tol * scale ? DiscontinuityClass::Shock
                                               : DiscontinuityClass::Alfven;
}

ContactReductionReport contact_reduction_check(const ThermoParams& par,
                                               const PrimitiveState& left,
                                               const PrimitiveState& right,
                                               const FrontGeometry& g, double tol) {
  if (!(std::abs(g.sigma) < 1.0))
    throw std::domain_error(
        "contact_reduction_check: |sigma| >= 1, the discontinuity speed must be "
        "below the speed of light");
  const SideEval L = eval_side(par, left, g);
  const SideEval R = eval_side(par, right, g);
  const double scale =
      std::max({1.0, std::abs(L.q), std::abs(R.q), L.rho, R.rho, L.h, R.h});
  const double Hn = 0.5 * (L.Hn + R.Hn);
  if (std::max(std::abs(L.j), std::abs(R.j)) > tol * scale)
    throw std::invalid_argument(
        "contact_reduction_check: mass flux frak(j) != 0 on the given data");
  if (std::abs(Hn) <= tol * scale)
    throw std::invalid_argument(
        "contact_reduction_check: H_n = 0, data is not a contact candidate");

  ContactReductionReport rep;
  auto push = [&](std::string name, double residual) {
    rep.steps.push_back({std::move(name), residual,
                         std::abs(residual) <= tol * scale});
  };
  // frak(j)=0 on both sides forces v_n = sigma on each side.
  push("[v_n] = 0 (from frak(j)=0)", R.vn - L.vn);
  // (14) with frak(j)=0 reads -H_n [v_tau] = 0.
  push("(14) => [v_tau] = 0",
       std::max(std::abs(Hn * (R.vt[0] - L.vt[0])),
                std::abs(Hn * (R.vt[1] - L.vt[1]))) / std::abs(Hn));
  // (12) with frak(j)=0 and [v]=0 collapses to (16): (1-sigma^2)[H_tau] = 0.
  const double one_m_s2 = 1.0 - g.sigma * g.sigma;
  push("(16) (1-sigma^2)[H_tau] = 0",
       std::max(std::abs(one_m_s2 * (R.Ht[0] - L.Ht[0])),
                std::abs(one_m_s2 * (R.Ht[1] - L.Ht[1]))));
  // (13) plus [H_tau]=0 gives [H]=0.
  push("(13) => [H] = 0", (R.H - L.H).cwiseAbs().maxCoeff());
  // (11) with frak(j)=0 and [H]=0 leaves [q]=[p]=0.
  push("(11) => [p] = 0", R.v == L.v && R.H == L.H
                              ? right.p - left.p
                              : rh_residuals(par, left, right, g).r11);
  rep.satisfies_contact_conditions = true;
  for (const auto& s : rep.steps) rep.satisfies_contact_conditions &= s.pass;
  return rep;
}

std::string ContactReductionReport::describe() const {
  std::ostringstream os;
  for (const auto& s : steps)
    os << (s.pass ? "  pass  " : "  FAIL  ") << s.name << "  (residual "
       << s.residual << ")\n";
  os << (satisfies_contact_conditions ? "data satisfies the contact conditions (17)\n"
                                      : "data does NOT satisfy (17)\n");
  return os.str();
}

}  // namespace rmhd
