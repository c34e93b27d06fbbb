#include "molsym/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>

#include "molsym/phasespace.hpp"
#include "molsym/wigner.hpp"

namespace molsym {

namespace {

bool is_even(int l) { return (l % 2 + 2) % 2 == 0; }

// <cos^2 theta> block for fixed m over l = |m|..lmax, exact up to the truncation.
Eigen::MatrixXd cos2_block(int m, int lmax) {
  const int lo = std::abs(m);
  if (lo > lmax) return {};
  const int n = lmax + 2 - lo;  // one extra shell so the square is exact inside
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    const double l = lo + i;
    const double v = std::sqrt(((l + 1) * (l + 1) - double(m) * m) / ((2 * l + 1) * (2 * l + 3)));
    c(i, i + 1) = c(i + 1, i) = v;
  }
  return (c * c).topLeftCorner(n - 1, n - 1);
}

// Rotation taking +z to `axis`.
Rotation frame_for(const Eigen::Vector3d& axis) {
  const double n = axis.norm();
  if (!(n > 0) || !std::isfinite(n)) throw InvalidArgument("axis must be a finite nonzero vector");
  const Eigen::Vector3d u = axis / n;
  const Eigen::Vector3d cross = Eigen::Vector3d::UnitZ().cross(u);
  if (cross.norm() < 1e-14) return u.z() > 0 ? Rotation() : Rotation::about_y(kPi);
  return Rotation::from_axis_angle(cross, std::acos(std::clamp(u.z(), -1.0, 1.0)));
}

// Apply D^l(r) (or its adjoint) to every l block of a (l, m) vector.
CVector rotate_blocks(const CVector& c, int lmax, const Rotation& r, bool adjoint) {
  CVector out(c.size());
  for (int l = 0; l <= lmax; ++l) {
    const CMatrix D = wigner_D(l, r);
    const auto blk = c.segment(l * l, 2 * l + 1);
    out.segment(l * l, 2 * l + 1) = adjoint ? CVector(D.adjoint() * blk) : CVector(D * blk);
  }
  return out;
}

double alignment_z(const CVector& c, int lmax) {
  double total = 0;
  for (int m = -lmax; m <= lmax; ++m) {
    const Eigen::MatrixXd M = cos2_block(m, lmax);
    CVector v(M.rows());
    for (int i = 0; i < M.rows(); ++i) {
      const int l = std::abs(m) + i;
      v[i] = c[l * l + m + l];
    }
    total += std::real(v.dot(M.cast<cplx>() * v));
  }
  return total;
}

void check_support(const RotorState& s) {
  for (int l = 0; l <= s.lmax; ++l) {
    if (s.allowed[l]) continue;
    if (s.coeffs.segment(l * l, 2 * l + 1).cwiseAbs().maxCoeff() > 1e-14)
      throw InvalidArgument("l = " + std::to_string(l) + " is outside species " + s.species);
  }
}

}  // namespace

std::string to_string(PlanarSpecies s) { return s == PlanarSpecies::Para ? "para" : "ortho"; }

int swap_sign(NuclearSpin s) { return s == NuclearSpin::Singlet ? -1 : 1; }

cplx planar_pi_phase(const std::map<int, cplx>& coeffs) {
  bool even = false, odd = false;
  for (const auto& [l, c] : coeffs) {
    if (std::abs(c) == 0) continue;
    (is_even(l) ? even : odd) = true;
  }
  if (even && odd) throw InvalidArgument("mixed-parity state has no global phase under a pi rotation");
  if (!even && !odd) throw InvalidArgument("zero state has no global phase");
  return even ? 1.0 : -1.0;
}

PlanarState planar_state(std::map<int, cplx> coeffs, NuclearSpin spin) {
  const cplx phase = planar_pi_phase(coeffs);
  PlanarState s;
  s.species = phase.real() > 0 ? PlanarSpecies::Para : PlanarSpecies::Ortho;
  const int want = s.species == PlanarSpecies::Para ? -1 : 1;
  if (swap_sign(spin) != want)
    throw InvalidArgument(to_string(s.species) + " states pair with the " +
                          (want < 0 ? std::string("singlet") : std::string("triplet")));
  double norm = 0;
  for (const auto& [l, c] : coeffs) norm += std::norm(c);
  norm = std::sqrt(norm);
  for (auto& [l, c] : coeffs) c /= norm;
  s.coeffs = std::move(coeffs);
  s.spin = spin;
  return s;
}

PlanarState planar_position_state(PlanarSpecies species, double phi, int lmax, NuclearSpin spin) {
  if (lmax < 0) throw InvalidArgument("lmax must be nonnegative");
  std::map<int, cplx> c;
  const bool para = species == PlanarSpecies::Para;
  for (int l = -lmax; l <= lmax; ++l)
    if (is_even(l) == para) c[l] = 2.0 * std::polar(1.0, phi * l) / std::sqrt(kTwoPi);
  if (c.empty()) throw InvalidArgument("no momenta of this parity below lmax");
  return planar_state(std::move(c), spin);
}

int planar_perrotation_sign(const PlanarState& s) {
  return int(std::lround(planar_pi_phase(s.coeffs).real())) * swap_sign(s.spin);
}

PlanarRotation planar_rotate(const PlanarState& s, double phi) {
  PlanarRotation out{s, std::nullopt};
  for (auto& [l, c] : out.state.coeffs) c *= std::polar(1.0, phi * l);
  const double turns = phi / kPi;
  const double k = std::round(turns);
  if (std::abs(turns - k) < 1e-12 && !is_even(int(k))) out.pi_phase = planar_pi_phase(s.coeffs);
  return out;
}

RotorState rotor_state(const SymmetryGroup& linear, const std::string& species, int lmax, double B) {
  if (linear.is_finite()) throw InvalidArgument("rotor states need C_inf or D_inf, got " + linear.name());
  check_ell(lmax);
  if (!(B > 0)) throw InvalidArgument("rotational constant must be positive");
  const ContinuousIrrep r = linear.continuous->irrep(species);
  if (r.dim != 1 || r.lambda != 0) throw InvalidArgument("rotor species must have zero molecule-frame momentum");
  RotorState s;
  s.B = B;
  s.lmax = lmax;
  s.species = r.label;
  for (int l = 0; l <= lmax; ++l) s.allowed.push_back(linear.continuous->multiplicity(l, r) > 0);
  s.coeffs = CVector::Zero((lmax + 1) * (lmax + 1));
  return s;
}

RotorState rotor_basis_state(const SymmetryGroup& linear, const std::string& species, int l, int m, int lmax,
                             double B) {
  RotorState s = rotor_state(linear, species, lmax, B);
  if (l < 0 || l > lmax || std::abs(m) > l) throw InvalidArgument("|l m> outside the truncation");
  s.at(l, m) = 1;
  normalize(s);
  return s;
}

void normalize(RotorState& s) {
  check_support(s);
  const double n = s.coeffs.norm();
  if (!(n > 0)) throw InvalidArgument("rotor state has zero norm");
  s.coeffs /= n;
}

RotorState rotor_evolve(const RotorState& s, double t) {
  if (!(t >= 0)) throw InvalidArgument("evolution time must be nonnegative");
  RotorState out = s;
  const double cycles = t * s.B / kTwoPi;
  double frac = cycles - std::floor(cycles);
  if (std::abs(cycles - std::round(cycles)) < 1e-12 * std::max(1.0, cycles)) frac = 0;
  if (frac == 0) return out;
  for (int l = 1; l <= s.lmax; ++l) {
    const double x = double(l) * (l + 1) * frac;
    const cplx ph = std::polar(1.0, -kTwoPi * (x - std::floor(x)));
    out.coeffs.segment(l * l, 2 * l + 1) *= ph;
  }
  return out;
}

double alignment(const RotorState& s, const Eigen::Vector3d& axis) {
  const Rotation R = frame_for(axis);
  return alignment_z(rotate_blocks(s.coeffs, s.lmax, R, true), s.lmax);
}

KickResult impulsive_kick(const RotorState& s, const Eigen::Vector3d& axis, double eta, double max_leakage) {
  if (!std::isfinite(eta)) throw InvalidArgument("kick strength must be finite");
  KickResult out{s, 0};
  if (eta == 0) return out;
  const Rotation R = frame_for(axis);
  const CVector local = rotate_blocks(s.coeffs, s.lmax, R, true);
  const int pad = 16 + 2 * int(std::ceil(std::abs(eta)));
  const int big = s.lmax + pad;

  CVector kicked = CVector::Zero(local.size());
  for (int m = -s.lmax; m <= s.lmax; ++m) {
    const int lo = std::abs(m);
    const Eigen::MatrixXd M = cos2_block(m, big);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    const CMatrix U = es.eigenvectors().cast<cplx>() *
                      es.eigenvalues().unaryExpr([&](double x) { return std::polar(1.0, eta * x); }).asDiagonal() *
                      es.eigenvectors().transpose().cast<cplx>();
    CVector v = CVector::Zero(M.rows());
    for (int l = lo; l <= s.lmax; ++l) v[l - lo] = local[l * l + m + l];
    const CVector w = U * v;
    for (int l = lo; l <= big; ++l) {
      if (l <= s.lmax)
        kicked[l * l + m + l] = w[l - lo];
      else
        out.leakage += std::norm(w[l - lo]);
    }
  }
  if (out.leakage > max_leakage) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", out.leakage);
    throw ComputationError(std::string("kick leaks ") + buf +
                           " of the population above lmax = " + std::to_string(s.lmax));
  }
  out.state.coeffs = rotate_blocks(kicked, s.lmax, R, false);
  return out;
}

std::vector<Pulse> tilted_schedule(int pulses, double tilt, double revival_time) {
  if (pulses < 0) throw InvalidArgument("pulse count must be nonnegative");
  std::vector<Pulse> out;
  for (int k = 0; k < pulses; ++k)
    out.push_back({k * revival_time, Eigen::Vector3d(std::sin(k * tilt), 0, std::cos(k * tilt))});
  return out;
}

StroboscopicTrace stroboscopic_reorient(const RotorState& s, const std::vector<Pulse>& schedule, double eta,
                                        const Eigen::Vector3d& target, int samples_per_period) {
  if (samples_per_period < 1) throw InvalidArgument("samples per period must be positive");
  const double T = s.revival_time();
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (!(schedule[k].time >= 0)) throw InvalidArgument("pulse times must be nonnegative");
    if (k == 0) continue;
    if (schedule[k].time < schedule[k - 1].time) throw InvalidArgument("pulse times must be nondecreasing");
    const Eigen::Vector3d a = schedule[k - 1].axis.normalized(), b = schedule[k].axis.normalized();
    if (std::acos(std::clamp(a.dot(b), -1.0, 1.0)) >= kPi / 2)
      throw InvalidArgument("consecutive pulse axes must differ by less than 90 degrees");
  }

  StroboscopicTrace tr;
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const double n = schedule[k].time / T;
    if (std::abs(n - std::round(n)) > 1e-9)
      tr.warnings.push_back("pulse " + std::to_string(k) + " is not at a revival multiple");
  }
  tr.initial = alignment(s, target);

  const double end = (schedule.empty() ? 0.0 : schedule.back().time) + T;
  const int steps = int(std::ceil(end / T * samples_per_period - 1e-9));
  RotorState anchor = s;
  double anchor_time = 0;
  std::size_t next = 0;
  tr.peak_after_pulse.assign(schedule.size(), 0.0);
  for (int i = 0; i <= steps; ++i) {
    const double t = std::min(end, i * T / samples_per_period);
    while (next < schedule.size() && schedule[next].time <= t + 1e-12 * T) {
      anchor = rotor_evolve(anchor, schedule[next].time - anchor_time);
      anchor_time = schedule[next].time;
      KickResult kr = impulsive_kick(anchor, schedule[next].axis, eta);
      tr.leakage += kr.leakage;
      anchor = std::move(kr.state);
      ++next;
    }
    const RotorState now = rotor_evolve(anchor, std::max(0.0, t - anchor_time));
    const double v = alignment(now, target);
    tr.samples.push_back({t, int(next), v});
    if (next > 0) tr.peak_after_pulse[next - 1] = std::max(tr.peak_after_pulse[next - 1], v);
    if (i == steps) tr.final_state = now;
  }
  return tr;
}

FringeFactor interferometer_phase(const RotorState& ref, const Rotation& g) {
  check_support(ref);
  cplx overlap = 0;
  double norm = 0;
  for (int l = 0; l <= ref.lmax; ++l) {
    for (int m = -l; m <= l; ++m)
      if (m != 0 && std::abs(ref.at(l, m)) > 1e-14) throw InvalidArgument("reference state must have m = 0 only");
    const cplx c = ref.at(l, 0);
    if (c == cplx(0)) continue;
    overlap += std::norm(c) * wigner_D(l, g)(l, l);
    norm += std::norm(c);
  }
  if (!(norm > 0)) throw InvalidArgument("reference state has zero norm");
  FringeFactor f;
  f.visibility = std::abs(overlap) / norm;
  if (f.visibility < 1e-12) throw ComputationError("reference overlap vanishes; the fringe phase is undefined");
  f.factor = overlap / norm;
  f.phase = std::arg(f.factor);
  return f;
}

Rotation equatorial_pi(double alpha) {
  return Rotation::about_z(alpha) * Rotation::about_y(kPi) * Rotation::about_z(-alpha);
}

}  // namespace molsym
