#pragma once

#include <vector>

#include "molsym/continuous.hpp"
#include "molsym/isotypic.hpp"

namespace molsym {

/// An irrep of a finite or continuous symmetry group, resolved once.
struct IrrepRef {
  SymmetryGroup group;
  std::string label;
  int index = -1;  // finite groups
  int dim = 1;
  std::optional<ContinuousIrrep> continuous;
};

IrrepRef resolve_irrep(const SymmetryGroup& g, const std::string& label);

/// |G| for finite groups; 2 pi for C_inf and 4 pi for D_inf.
double group_volume(const SymmetryGroup& g);
int irrep_multiplicity(const IrrepRef& r, int l);

enum class CosetChart {
  /// Element of sG with the smallest rotation angle; ties by lexicographic quaternion.
  ClosestToIdentity,
  /// C_N only: Euler gamma reduced to [0, 2 pi / N).
  EulerGamma,
};

struct CosetPoint {
  Rotation s;
  Rotation r;
  Rotation g;        // r = s g
  int element = -1;  // index of g for finite groups
};

/// Continuous groups use the (alpha, beta) chart: s = R(alpha, beta, 0), with beta <= pi/2 for D_inf.
CosetPoint canonicalize(const Rotation& r, const SymmetryGroup& g, CosetChart chart = CosetChart::ClosestToIdentity);

/// D^l_{m; mu kappa}(s) = <m| D^l(s) |mu kappa> for all m (rows) and (mu, kappa) columns mu * mult + kappa.
CMatrix adapted_matrix_elements(const IrrepRef& r, int l, const Rotation& s);

/// sqrt(((2l+1)/d) / (8 pi^2 / |G|)) D^l_{m; mu kappa}(s). Throws unless mult_l > 0.
cplx harmonic(const IrrepRef& r, int l, int m, int kappa, const Rotation& s, int mu);

/// Truncated species position state |s, mu> over the (l, m, kappa) basis, damped by exp(-delta l(l+1)/2).
struct PositionState {
  IrrepRef irrep;
  Rotation s;
  int mu = 0;
  int lmax = 0;
  double delta = 0;
  std::vector<MomentumIndex> index;
  CVector coeffs;
};

PositionState position_state(const IrrepRef& r, const Rotation& s, int mu, int lmax, double delta = 0);

/// Lab-frame rotation: each l block is multiplied by D^l(g) on the m index.
PositionState rotate_lab(const PositionState& state, const Rotation& g);

/// Inner product of truncated states of the same irrep and truncation.
cplx gram_overlap(const PositionState& a, const PositionState& b);

/// Full asymmetric basis |l m omega>, omega the molecule-frame index; offset(l) = l(4l^2-1)/3.
int full_index(int l, int m, int omega);
int full_size(int lmax);

/// <l m omega|r> = sqrt((2l+1)/8pi^2) D^l_{m omega}(r), damped.
CVector asymmetric_position(const Rotation& r, int lmax, double delta = 0);

/// Uncoupled |s; Gamma^{mu nu}> in the full basis from the adapted expansion.
CVector zak_state(const FiniteGroup& g, int irrep, const Rotation& s, int mu, int nu, int lmax, double delta = 0);
/// Same state as sqrt(d/|G|) sum_g Gamma^{mu nu}(g) |r = s g>.
CVector zak_state_from_cosets(const FiniteGroup& g, int irrep, const Rotation& s, int mu, int nu, int lmax,
                              double delta = 0);

struct FourierReport {
  int states = 0;
  int quadrature_points = 0;
  double residual = 0;  // max |Gram - I|
};

/// Gram matrix of the harmonics over SO(3)/G, by product quadrature over SO(3) divided by the
/// group volume: 2q+1 uniform alpha and gamma nodes and q+1 Gauss-Legendre nodes in cos(beta).
/// Requires q >= lmax.
FourierReport fourier_roundtrip(const IrrepRef& r, int lmax, int q);

}  // namespace molsym
