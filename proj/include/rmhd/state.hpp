#pragma once

#include <Eigen/Core>

namespace rmhd {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using Vector6 = Eigen::Matrix<double, 6, 1>;

/// Primitive fluid state (p, v, H, S). Velocity is the 3-velocity (|v| < 1 in
/// units with the speed of light equal to one); H is the magnetic 3-vector.
/// Planar 2-D flows pin the third components of v and H to zero.
struct PrimitiveState {
  double p = 1.0;
  Vec3 v = Vec3::Zero();
  Vec3 H = Vec3::Zero();
  double S = 0.0;

  bool planar() const { return v[2] == 0.0 && H[2] == 0.0; }
};

}  // namespace rmhd
