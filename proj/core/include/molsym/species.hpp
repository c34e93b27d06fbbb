#pragma once

#include <optional>
#include <string>
#include <vector>

#include "molsym/continuous.hpp"
#include "molsym/presets.hpp"

namespace molsym {

/// Per-element permutation of each orbit: perms[g][o][i] = j when g moves nucleus i onto j.
struct PermAction {
  GroupPtr group;
  std::vector<int> two_s;  // per orbit
  std::vector<std::vector<std::vector<int>>> perms;

  int orbit_count() const { return int(two_s.size()); }
  int cycles(int element, int orbit) const;
  int sign(int element, int orbit) const;
};

/// Matches rotated coordinates to the orbit; checks the homomorphism property on the table.
/// Throws InvalidArgument if some rotation does not map an orbit onto itself.
PermAction perm_action_from_geometry(const FiniteGroup& g, const std::vector<NucleusOrbit>& orbits, double tol = 1e-6);

/// sigma(g) = prod_orbits sign(P_orbit(g))^(2s), as an irrep index of the group.
int spin_statistics_irrep(const PermAction& action);

/// m(Lambda) for every irrep: (1/|G|) sum_g conj(chi_Lambda(g)) prod_orbits (2s+1)^cycles(g).
std::vector<BigInt> nuclear_decomposition(const PermAction& action);

/// Vector spanning the rank-one sigma-isotypic part of Gamma (x) tau, index nu_rot * d + nu_nuc,
/// first nonzero component real and positive.
CVector coupling_state(const FiniteGroup& g, int rot, int nuc, int sigma);

struct SpeciesDescriptor {
  std::string rot;
  std::string nuc;
  std::string sigma;
  int rot_index = -1;  // irrep indices, finite groups only
  int nuc_index = -1;
  int dim = 1;
  BigInt weight = 0;
  std::string display;  // rot label, with "*" for nontrivial sigma
  CVector coupling;     // length dim^2
};

struct SpeciesTable {
  SymmetryGroup group;
  std::string sigma;
  bool sigma_trivial = true;
  std::vector<SpeciesDescriptor> species;
  std::vector<SpeciesDescriptor> missing;  // admissible pairs with zero weight
  BigInt spectator_factor = 1;
  /// Identical-nucleus orbits of both statistics with nonzero spin occur together.
  bool mixed_statistics = false;
  /// (2s+1)^N summed over the permuted orbits.
  BigInt nuclear_dimension = 1;
};

/// All pairs (Gamma, tau) with sigma in Gamma (x) tau and m(tau) > 0.
SpeciesTable enumerate_species(const FiniteGroup& g, int sigma, const std::vector<BigInt>& weights);

/// Species of a molecule under its symmetry group; C_inf and D_inf in closed form.
SpeciesTable molecule_species(const SymmetryGroup& g, const std::vector<NucleusOrbit>& orbits,
                              const std::vector<Spectator>& spectators = {});
SpeciesTable molecule_species(const MoleculePreset& preset);

/// Multiplicity of a species' rotational irrep at l.
int species_multiplicity(const SpeciesTable& table, const SpeciesDescriptor& s, int l);

enum class FractionWeight {
  /// mult_l(tau) m(tau) per species and l; reproduces the published dihedral table.
  NuclearIrrep,
  /// mult_l(Gamma) m(tau), the literal momentum-state count.
  RotationalIrrep,
};

/// Fraction of states with d > 1 over l <= lmax.
Rational entangled_fraction(const SpeciesTable& table, int lmax, FractionWeight w = FractionWeight::NuclearIrrep);
/// Closed form sum_{d>1} d m / sum d m.
Rational entangled_fraction_limit(const SpeciesTable& table);

struct EntangledBasisState {
  int l = 0, m = 0, kappa = 0;
  BigInt chi = 0;
  /// d x d coefficients over (nu_rot, nu_nuc), the coupling vector reshaped.
  CMatrix coefficients;
  /// Molecule-frame components of |l_{m kappa}, nu> over omega = -l..l, one column per nu.
  CMatrix rot_frame;
};

EntangledBasisState entangled_basis_state(const SpeciesTable& table, const SpeciesDescriptor& s, int l, int m,
                                          int kappa, const BigInt& chi);

/// Singular values above tol.
int schmidt_rank(const CMatrix& coefficients, double tol = 1e-10);

}  // namespace molsym
