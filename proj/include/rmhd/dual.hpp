#pragma once

#include <cmath>

namespace rmhd {

/// First-order forward-mode scalar: carries a value and one directional
/// derivative through arithmetic. Used to differentiate the coefficient-matrix
/// assembly exactly (no truncation error), cross-checked against finite
/// differences in the tests.
struct Dual {
  double v = 0.0;  // value
  double d = 0.0;  // derivative along the seeded direction

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT: implicit for mixed arithmetic
  Dual(double value, double deriv) : v(value), d(deriv) {}
};

inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator-(Dual a) { return {-a.v, -a.d}; }
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
inline Dual operator/(Dual a, Dual b) {
  const double inv = 1.0 / b.v;
  return {a.v * inv, (a.d - a.v * inv * b.d) * inv};
}
inline Dual& operator+=(Dual& a, Dual b) { return a = a + b; }
inline Dual& operator-=(Dual& a, Dual b) { return a = a - b; }
inline Dual& operator*=(Dual& a, Dual b) { return a = a * b; }
inline Dual& operator/=(Dual& a, Dual b) { return a = a / b; }

inline Dual sqrt(Dual a) {
  const double r = std::sqrt(a.v);
  return {r, 0.5 * a.d / r};
}
inline Dual exp(Dual a) {
  const double e = std::exp(a.v);
  return {e, a.d * e};
}
inline Dual pow(Dual a, double e) {
  const double p = std::pow(a.v, e);
  return {p, e * std::pow(a.v, e - 1.0) * a.d};
}

/// Uniform accessors so templated code can read values off either scalar kind.
inline double value_of(double x) { return x; }
inline double value_of(Dual x) { return x.v; }

using std::exp;
using std::pow;
using std::sqrt;

}  // namespace rmhd
