#pragma once

// Templated assembly of the symmetric coefficient matrices and their flux
// parts. The scalar type T is double in normal use and Dual when directional
// derivatives of the matrices are needed. Unknown ordering throughout:
// (p, u1, u2, u3, H1, H2, H3, S).

#include <array>

#include "rmhd/dual.hpp"
#include "rmhd/eos.hpp"

namespace rmhd::detail {

template <class T>
using V3 = std::array<T, 3>;

template <class T>
struct M8 {
  std::array<T, 64> a{};
  T& operator()(int i, int j) { return a[i * 8 + j]; }
  const T& operator()(int i, int j) const { return a[i * 8 + j]; }
};

template <class T>
T dot(const V3<T>& x, const V3<T>& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

/// Kinematic quantities entering the matrix entries, from the state in
/// 4-velocity form (p, u, H, S).
template <class T>
struct KinT {
  T gamma;    // Lorentz factor, sqrt(1 + |u|^2)
  V3<T> v;    // u / gamma
  V3<T> b;    // magnetic 4-vector spatial part
  T vdH;      // v . H
  T H2;       // |H|^2
  T B2;       // |b|^2 - b0^2
};

template <class T>
KinT<T> kin_from_u(const V3<T>& u, const V3<T>& H) {
  KinT<T> k;
  k.gamma = sqrt(T(1.0) + dot(u, u));
  for (int i = 0; i < 3; ++i) k.v[i] = u[i] / k.gamma;
  const T udH = dot(u, H);
  for (int i = 0; i < 3; ++i) k.b[i] = H[i] / k.gamma + udH * k.v[i];
  k.vdH = dot(k.v, H);
  k.H2 = dot(H, H);
  k.B2 = dot(k.b, k.b) - udH * udH;
  return k;
}

/// A0 from raw thermo (rho, a2, h) and kinematics. Symmetric entries written
/// once and mirrored.
template <class T>
M8<T> assemble_A0(const ThermoEvalT<T>& te, const KinT<T>& k, const V3<T>& H) {
  M8<T> A;
  const T ig = T(1.0) / k.gamma;
  A(0, 0) = k.gamma / (te.rho * te.a2);
  for (int i = 0; i < 3; ++i) {
    A(0, 1 + i) = k.v[i];
    A(1 + i, 0) = k.v[i];
  }
  const T acal_iso = te.rho * te.h * k.gamma + k.H2 * ig;
  const T acal_vv = te.rho * te.h * k.gamma + (k.H2 + k.B2) * ig;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      T e = -acal_vv * k.v[i] * k.v[j] - ig * H[i] * H[j] +
            k.vdH * ig * (k.v[i] * H[j] + H[i] * k.v[j]);
      if (i == j) e += acal_iso;
      A(1 + i, 1 + j) = e;
      A(1 + j, 1 + i) = e;
    }
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      T e = ig * k.gamma * k.v[i] * k.gamma * k.v[j];  // (u (x) u)/gamma
      if (i == j) e += ig;
      A(4 + i, 4 + j) = e;
      A(4 + j, 4 + i) = e;
    }
  A(7, 7) = T(1.0);
  return A;
}

/// N_j block: (1/Gamma) b (x) e_j - (v_j/Gamma) b (x) v - (H_j/Gamma^2) I.
template <class T>
void ncal_block(const KinT<T>& k, int jdir, const V3<T>& H, T N[3][3]) {
  const T ig = T(1.0) / k.gamma;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      T e = -k.v[jdir] * ig * k.b[r] * k.v[c];
      if (c == jdir) e += ig * k.b[r];
      if (r == c) e -= H[jdir] * ig * ig;
      N[r][c] = e;
    }
}

template <class T>
M8<T> assemble_Aj(const ThermoEvalT<T>& te, const KinT<T>& k, const V3<T>& H,
                  int jdir) {
  M8<T> A;
  const T ig = T(1.0) / k.gamma;
  const T vj = k.v[jdir];
  const T Hj = H[jdir];
  A(0, 0) = k.gamma * vj / (te.rho * te.a2);  // u_j/(rho a^2)
  for (int i = 0; i < 3; ++i) {
    const T e = (i == jdir) ? T(1.0) : T(0.0);
    A(0, 1 + i) = e;
    A(1 + i, 0) = e;
  }
  const T aj_iso = te.rho * te.h * k.gamma + k.H2 * ig;
  const T aj_vv = te.rho * te.h * k.gamma + (k.H2 - k.B2) * ig;
  for (int i = 0; i < 3; ++i)
    for (int c = i; c < 3; ++c) {
      const T ei = (i == jdir) ? T(1.0) : T(0.0);
      const T ec = (c == jdir) ? T(1.0) : T(0.0);
      T e = vj * (-aj_vv * k.v[i] * k.v[c] - ig * H[i] * H[c]);
      if (i == c) e += vj * aj_iso;
      T braces = ig * ig * (k.v[i] * H[c] + H[i] * k.v[c]) -
                 T(2.0) * k.vdH * (((i == c) ? T(1.0) : T(0.0)) - k.v[i] * k.v[c]);
      e += Hj * ig * braces;
      e += k.vdH * ig * (H[i] * ec + ei * H[c]);
      e -= k.B2 * ig * (k.v[i] * ec + ei * k.v[c]);
      A(1 + i, 1 + c) = e;
      A(1 + c, 1 + i) = e;
    }
  T N[3][3];
  ncal_block(k, jdir, H, N);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      A(4 + r, 1 + c) = N[r][c];
      A(1 + c, 4 + r) = N[r][c];
    }
  for (int i = 0; i < 3; ++i)
    for (int c = i; c < 3; ++c) {
      T e = vj * ig * k.gamma * k.v[i] * k.gamma * k.v[c];
      if (i == c) e += vj * ig;
      A(4 + i, 4 + c) = e;
      A(4 + c, 4 + i) = e;
    }
  A(7, 7) = vj;
  return A;
}

/// Flux part G_j of the decomposition A_j = v_j A_0 + G_j, assembled from its
/// own closed-form blocks (the independent second path).
template <class T>
M8<T> assemble_Gj(const KinT<T>& k, const V3<T>& H, int jdir) {
  M8<T> G;
  const T ig = T(1.0) / k.gamma;
  const T vj = k.v[jdir];
  const T Hj = H[jdir];
  for (int i = 0; i < 3; ++i) {
    T e = -vj * k.v[i];
    if (i == jdir) e += T(1.0);
    G(0, 1 + i) = e;
    G(1 + i, 0) = e;
  }
  for (int i = 0; i < 3; ++i)
    for (int c = i; c < 3; ++c) {
      const T ei = (i == jdir) ? T(1.0) : T(0.0);
      const T ec = (c == jdir) ? T(1.0) : T(0.0);
      T e = vj * (T(2.0) * k.B2 * ig * k.v[i] * k.v[c] -
                  k.vdH * ig * (k.v[i] * H[c] + H[i] * k.v[c]));
      T braces = ig * ig * (k.v[i] * H[c] + H[i] * k.v[c]) -
                 T(2.0) * k.vdH * (((i == c) ? T(1.0) : T(0.0)) - k.v[i] * k.v[c]);
      e += Hj * ig * braces;
      e += k.vdH * ig * (H[i] * ec + ei * H[c]);
      e -= k.B2 * ig * (k.v[i] * ec + ei * k.v[c]);
      G(1 + i, 1 + c) = e;
      G(1 + c, 1 + i) = e;
    }
  T N[3][3];
  ncal_block(k, jdir, H, N);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      G(4 + r, 1 + c) = N[r][c];
      G(1 + c, 4 + r) = N[r][c];
    }
  return G;
}

}  // namespace rmhd::detail
