#pragma once

#include <memory>
#include <vector>

#include "molsym/continuous.hpp"
#include "molsym/group.hpp"

namespace molsym {

/// Exact tr D^l(g) for element g, as a cyclotomic integer.
Cyclotomic wigner_character_exact(const FiniteGroup& g, int element, int l);

/// mult_l(Gamma) for every irrep of g, from exact character sums. Memoized.
const std::vector<int>& multiplicities(int l, const FiniteGroup& g);
int multiplicity(int l, const FiniteGroup& g, int irrep);
int multiplicity(int l, const SymmetryGroup& g, const std::string& irrep);

struct AdaptedBlock {
  int irrep = 0;
  int dim = 1;
  int mult = 0;
  int offset = 0;  // column of (nu, kappa) is offset + nu * mult + kappa
};

/// Isometry V with conj(D^l(g)) V = V (sum_Gamma Gamma(g) (x) 1_mult) for every g.
/// Rows are indexed by omega + l; indices nu and kappa are zero-based.
struct AdaptedBasis {
  int l = 0;
  std::vector<AdaptedBlock> blocks;
  CMatrix V;

  /// Block of `irrep`, or nullptr when it does not occur at this l.
  const AdaptedBlock* block(int irrep) const;
  int column(int irrep, int nu, int kappa) const;
};

/// Memoized per (group, l). Cyclic groups use the native |omega> columns,
/// ascending in omega; other groups use Schur projectors with pivoted
/// Gram-Schmidt over seeds |omega> in descending omega.
std::shared_ptr<const AdaptedBasis> adapted_basis(int l, const FiniteGroup& g);

struct MomentumIndex {
  int l = 0;
  int m = 0;
  int kappa = 0;  // zero-based
  bool operator==(const MomentumIndex&) const = default;
};

/// Index set {(l, m, kappa)} of an irrep's rotational states up to lmax.
std::vector<MomentumIndex> rotational_states(const FiniteGroup& g, int irrep, int lmax);
std::vector<MomentumIndex> rotational_states(const ContinuousGroup& g, const ContinuousIrrep& r, int lmax);

}  // namespace molsym
