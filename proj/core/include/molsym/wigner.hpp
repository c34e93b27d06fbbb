#pragma once

#include "molsym/common.hpp"
#include "molsym/rotation.hpp"

namespace molsym {

// Matrices are indexed by m + l for m = -l..l in ascending order.
//
// D^l_{m'm}(alpha, beta, gamma) = exp(-i m' alpha) d^l_{m'm}(beta) exp(-i m gamma),
// so that D^l(z, phi) = exp(-i phi L_z) and conj(D^l(z, phi))|w> = exp(i w phi)|w>.

/// Full Wigner matrix D^l(g).
CMatrix wigner_D(int l, const Rotation& g);

/// Little-d via the eigenbasis of L_y (stable for every l up to the cap).
Eigen::MatrixXd wigner_small_d(int l, double beta);

/// Little-d via the factorial sum with log-factorial scaling. Loses digits
/// for large l; kept as an independent cross-check.
Eigen::MatrixXd wigner_small_d_series(int l, double beta);

/// Little-d from exact rational sum coefficients, evaluated in 50-digit
/// floating point. Slow; intended for l <= 10 oracles.
Eigen::MatrixXd wigner_small_d_exact(int l, double beta);

struct MomentumGenerators {
  int l = 0;
  CMatrix Lx, Ly, Lz;
  const CMatrix& operator[](int axis) const { return axis == 0 ? Lx : axis == 1 ? Ly : Lz; }
};

/// Angular-momentum matrices with the Condon-Shortley phase.
MomentumGenerators generators(int l);

/// tr D^l for a rotation by theta: sin((l + 1/2) theta) / sin(theta / 2).
double wigner_character(int l, double theta);

}  // namespace molsym
