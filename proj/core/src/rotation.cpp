#include "molsym/rotation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace molsym {

namespace {
std::atomic<int> g_ell_cap{128};

int default_threads() {
  if (const char* env = std::getenv("MOLSYM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<int> g_threads{default_threads()};
}  // namespace

int thread_count() { return g_threads.load(std::memory_order_relaxed); }

void set_thread_count(int n) {
  if (n < 1) throw InvalidArgument("thread count must be positive");
  g_threads.store(n, std::memory_order_relaxed);
}

int ell_cap() { return g_ell_cap.load(std::memory_order_relaxed); }

void set_ell_cap(int cap) {
  if (cap < 0) throw InvalidArgument("ell cap must be nonnegative");
  g_ell_cap.store(cap, std::memory_order_relaxed);
}

void check_ell(int l) {
  if (l < 0) throw InvalidArgument("angular momentum must be nonnegative, got " + std::to_string(l));
  if (l > ell_cap())
    throw InvalidArgument("angular momentum " + std::to_string(l) + " exceeds cap " + std::to_string(ell_cap()));
}

Rotation::Rotation(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (!(n > 0) || !std::isfinite(n)) throw InvalidArgument("quaternion must be finite and nonzero");
  q_ = {w / n, x / n, y / n, z / n};
}

Rotation Rotation::from_euler(double alpha, double beta, double gamma) {
  return about_z(alpha) * about_y(beta) * about_z(gamma);
}

Rotation Rotation::from_axis_angle(const Eigen::Vector3d& axis, double angle) {
  const double n = axis.norm();
  if (!(n > 0)) throw InvalidArgument("rotation axis must be nonzero");
  angle = std::remainder(angle, kTwoPi);
  const double s = std::sin(angle / 2) / n;
  return {std::cos(angle / 2), axis.x() * s, axis.y() * s, axis.z() * s};
}

Rotation Rotation::from_matrix(const Eigen::Matrix3d& m) {
  Eigen::Quaterniond q(m);
  return {q.w(), q.x(), q.y(), q.z()};
}

Eigen::Matrix3d Rotation::matrix() const {
  const auto [w, x, y, z] = q_;
  Eigen::Matrix3d r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y), 2 * (x * y + w * z), 1 - 2 * (x * x + z * z),
      2 * (y * z - w * x), 2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r;
}

EulerAngles Rotation::euler() const {
  const Eigen::Matrix3d r = matrix();
  EulerAngles e;
  const double cb = std::clamp(r(2, 2), -1.0, 1.0);
  const double sb = std::hypot(r(0, 2), r(1, 2));
  e.beta = std::atan2(sb, cb);
  if (sb > 1e-12) {
    e.alpha = std::atan2(r(1, 2), r(0, 2));
    e.gamma = std::atan2(r(2, 1), -r(2, 0));
  } else if (cb > 0) {
    // beta = 0: only alpha + gamma is defined
    e.alpha = std::atan2(r(1, 0), r(0, 0));
    e.gamma = 0;
  } else {
    // beta = pi: only alpha - gamma is defined
    e.alpha = std::atan2(-r(0, 1), -r(0, 0));
    e.gamma = 0;
  }
  return e;
}

double Rotation::angle() const {
  const double v = std::sqrt(q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3]);
  return 2 * std::atan2(v, std::abs(q_[0]));
}

Eigen::Vector3d Rotation::axis() const {
  Eigen::Vector3d v(q_[1], q_[2], q_[3]);
  const double n = v.norm();
  if (n < 1e-15) return {0, 0, 1};
  return (q_[0] < 0 ? -v : v) / n;
}

Rotation Rotation::operator*(const Rotation& o) const {
  const auto [a1, b1, c1, d1] = q_;
  const auto [a2, b2, c2, d2] = o.q_;
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

double Rotation::distance(const Rotation& other) const { return (matrix() - other.matrix()).cwiseAbs().maxCoeff(); }

}  // namespace molsym
