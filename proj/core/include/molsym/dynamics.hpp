#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "molsym/continuous.hpp"

namespace molsym {

// ---------------------------------------------------------------- planar toy model

enum class PlanarSpecies { Para, Ortho };
enum class NuclearSpin { Singlet, TripletUp, TripletZero, TripletDown };

std::string to_string(PlanarSpecies s);
/// Exchange sign of the two-spin state: -1 for the singlet, +1 for the triplets.
int swap_sign(NuclearSpin s);

/// Homonuclear diatomic rotating in a plane: sum_l c_l |l> (x) |spin>.
/// Para pairs even l with the singlet, ortho pairs odd l with a triplet.
struct PlanarState {
  std::map<int, cplx> coeffs;
  PlanarSpecies species = PlanarSpecies::Para;
  NuclearSpin spin = NuclearSpin::Singlet;
};

/// Normalizes and infers the species. Throws InvalidArgument for mixed parity,
/// an empty or zero state, or a spin state of the wrong exchange symmetry.
PlanarState planar_state(std::map<int, cplx> coeffs, NuclearSpin spin);

/// (|phi> +- |phi + pi>) truncated to |l| <= lmax, with |phi> = (2 pi)^-1/2 sum_l e^{i phi l}|l>.
PlanarState planar_position_state(PlanarSpecies species, double phi, int lmax, NuclearSpin spin);

/// Sign of the molecule-frame pi-perrotation e^{i pi l} (x) SWAP. Always -1 for admissible states.
int planar_perrotation_sign(const PlanarState& s);

/// Global phase of e^{i pi l} on a coefficient map; throws InvalidArgument when parity is mixed.
cplx planar_pi_phase(const std::map<int, cplx>& coeffs);

struct PlanarRotation {
  PlanarState state;
  std::optional<cplx> pi_phase;  // set when phi is an odd multiple of pi
};

/// Lab rotation c_l -> e^{i phi l} c_l.
PlanarRotation planar_rotate(const PlanarState& s, double phi);

// ---------------------------------------------------------------- linear rigid rotor

/// Linear rotor state over |l m>, l <= lmax, index l^2 + m + l.
struct RotorState {
  double B = 1;  // rotational constant as an angular frequency; T_rev = 2 pi / B
  int lmax = 0;
  std::string species;
  std::vector<char> allowed;  // per l
  CVector coeffs;

  double revival_time() const { return kTwoPi / B; }
  cplx& at(int l, int m) { return coeffs[l * l + m + l]; }
  cplx at(int l, int m) const { return coeffs[l * l + m + l]; }
};

/// Zero state for a one-dimensional species of C_inf or D_inf ("a", "a1", "a2").
RotorState rotor_state(const SymmetryGroup& linear, const std::string& species, int lmax, double B = 1);
/// Normalized |l m> in the species.
RotorState rotor_basis_state(const SymmetryGroup& linear, const std::string& species, int l, int m, int lmax,
                             double B = 1);
/// Throws InvalidArgument if the support leaves the species or the norm is zero; normalizes.
void normalize(RotorState& s);

/// Free evolution e^{-i B l(l+1) t}. Times within 1e-12 revivals of a multiple of T_rev are snapped.
RotorState rotor_evolve(const RotorState& s, double t);

/// <cos^2 theta_axis>.
double alignment(const RotorState& s, const Eigen::Vector3d& axis);

struct KickResult {
  RotorState state;
  double leakage = 0;  // population pushed above lmax, dropped
};

/// exp(i eta cos^2 theta_axis), evaluated in a padded basis and projected back.
/// Throws ComputationError when the dropped population exceeds max_leakage.
KickResult impulsive_kick(const RotorState& s, const Eigen::Vector3d& axis, double eta, double max_leakage = 1e-10);

struct Pulse {
  double time = 0;
  Eigen::Vector3d axis{0, 0, 1};
};

struct AlignmentSample {
  double time = 0;
  int pulses_applied = 0;
  double value = 0;
};

struct StroboscopicTrace {
  std::vector<AlignmentSample> samples;
  std::vector<double> peak_after_pulse;  // max alignment over the revival period after each pulse
  double initial = 0;
  double leakage = 0;
  std::vector<std::string> warnings;
  RotorState final_state;
};

/// Alternates free evolution and kicks, sampling <cos^2 theta_target> on a uniform grid of
/// `samples_per_period` points per revival. The trace runs one revival past the last pulse.
/// Consecutive pulse axes must differ by less than pi/2.
StroboscopicTrace stroboscopic_reorient(const RotorState& s, const std::vector<Pulse>& schedule, double eta,
                                        const Eigen::Vector3d& target, int samples_per_period = 64);

/// z-axis pulse followed by pulses tilted by `tilt` radians per step in the xz-plane,
/// one per revival.
std::vector<Pulse> tilted_schedule(int pulses, double tilt, double revival_time);

struct FringeFactor {
  cplx factor;
  double phase = 0;
  double visibility = 0;  // |<ref|U(g)|ref>| / <ref|ref>
};

/// <ref| U(g) |ref> / <ref|ref> for an m = 0 reference. Throws InvalidArgument for m != 0
/// components and ComputationError for vanishing overlap.
FringeFactor interferometer_phase(const RotorState& ref, const Rotation& g);

/// pi-rotation about the equatorial axis at azimuth alpha.
Rotation equatorial_pi(double alpha);

}  // namespace molsym
