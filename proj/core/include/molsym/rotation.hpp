#pragma once

#include <Eigen/Dense>
#include <array>

#include "molsym/common.hpp"

namespace molsym {

struct EulerAngles {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
};

/// Proper rotation stored as a unit quaternion (w, x, y, z).
///
/// Composition is active: (a * b) applies b first. Euler angles follow the
/// z-y-z convention R = Rz(alpha) Ry(beta) Rz(gamma).
class Rotation {
 public:
  Rotation() = default;
  Rotation(double w, double x, double y, double z);

  static Rotation identity() { return {}; }
  static Rotation from_euler(double alpha, double beta, double gamma);
  static Rotation from_euler(const EulerAngles& e) { return from_euler(e.alpha, e.beta, e.gamma); }
  static Rotation from_axis_angle(const Eigen::Vector3d& axis, double angle);
  static Rotation about_z(double angle) { return from_axis_angle({0, 0, 1}, angle); }
  static Rotation about_y(double angle) { return from_axis_angle({0, 1, 0}, angle); }
  static Rotation from_matrix(const Eigen::Matrix3d& m);

  double w() const { return q_[0]; }
  double x() const { return q_[1]; }
  double y() const { return q_[2]; }
  double z() const { return q_[3]; }
  const std::array<double, 4>& quaternion() const { return q_; }

  Eigen::Matrix3d matrix() const;
  EulerAngles euler() const;
  /// Rotation angle in [0, pi].
  double angle() const;
  /// Unit axis; +z for the identity.
  Eigen::Vector3d axis() const;

  Rotation inverse() const { return {q_[0], -q_[1], -q_[2], -q_[3]}; }
  Rotation operator*(const Rotation& other) const;
  Eigen::Vector3d apply(const Eigen::Vector3d& v) const { return matrix() * v; }

  /// Max-abs difference of the rotation matrices.
  double distance(const Rotation& other) const;
  bool approx(const Rotation& other, double tol = 1e-9) const { return distance(other) < tol; }

 private:
  std::array<double, 4> q_{1, 0, 0, 0};
};

}  // namespace molsym
