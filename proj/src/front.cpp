#include "rmhd/front.hpp"

#include <cmath>
#include <stdexcept>

namespace rmhd {

FrontFunction::FrontFunction(std::vector<double> phi, std::vector<double> dtphi)
    : phi_(std::move(phi)), dtphi_(std::move(dtphi)) {
  if (phi_.size() < 5)
    throw std::invalid_argument("FrontFunction: need at least 5 periodic nodes");
  if (dtphi_.empty()) dtphi_.assign(phi_.size(), 0.0);
  if (dtphi_.size() != phi_.size())
    throw std::invalid_argument("FrontFunction: phi/dtphi size mismatch");
}

double FrontFunction::d2phi(int j) const {
  const double h = h2();
  return (phi(j - 2) - 8.0 * phi(j - 1) + 8.0 * phi(j + 1) - phi(j + 2)) / (12.0 * h);
}

double FrontFunction::max_abs() const {
  double m = 0.0;
  for (double v : phi_) m = std::max(m, std::abs(v));
  return m;
}

double FrontFunction::value_at(double x2) const {
  const int n = size();
  double s = x2 * n;
  s -= std::floor(s / n) * n;
  const int j = static_cast<int>(std::floor(s));
  const double t = s - j;
  // 4-point Lagrange on nodes j-1..j+2
  const double ym = phi(j - 1), y0 = phi(j), y1 = phi(j + 1), y2 = phi(j + 2);
  return ym * (-t * (t - 1.0) * (t - 2.0) / 6.0) +
         y0 * ((t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0) +
         y1 * (-(t + 1.0) * t * (t - 2.0) / 2.0) +
         y2 * ((t + 1.0) * t * (t - 1.0) / 6.0);
}

StraightenEval straighten(const FrontFunction& front, double x1, int j,
                          CutoffKind kind) {
  if (front.max_abs() > 1.0)
    throw std::domain_error("straighten: ||phi||_inf > 1 violates admissibility (fi)");
  const double ph = front.phi(j);
  const double dt = front.dtphi(j);
  const double d2 = front.d2phi(j);
  StraightenEval e;
  const double cp = cutoff(x1, kind), cm = cutoff(-x1, kind);
  const double cpd = cutoff_deriv(x1, kind), cmd = cutoff_deriv(-x1, kind);
  e.Psi_plus = cp * ph;
  e.Psi_minus = cm * ph;
  e.Phi_plus = x1 + e.Psi_plus;
  e.Phi_minus = -x1 + e.Psi_minus;
  e.d1Phi_plus = 1.0 + cpd * ph;
  e.d1Phi_minus = -1.0 - cmd * ph;  // d/dx1 chi(-x1) = -chi'(-x1)
  e.dtPsi_plus = cp * dt;
  e.dtPsi_minus = cm * dt;
  e.d2Psi_plus = cp * d2;
  e.d2Psi_minus = cm * d2;
  return e;
}

}  // namespace rmhd
