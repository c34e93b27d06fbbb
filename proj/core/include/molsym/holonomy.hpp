#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "molsym/phasespace.hpp"

namespace molsym {

/// Axis index: 0 = x, 1 = y, 2 = z.
int parse_axis(char c);
char axis_name(int axis);

/// l-dependent connection component A^{a,l}_{mu nu}, evaluated two ways.
///
/// by_sum:        (|G|/d) sum_kappa <mu kappa| L_a |nu kappa> over the adapted states.
/// by_projection: sum_g Gamma^{nu mu}(g) tr(D^l(g) L_a).
struct ConnectionComponent {
  std::string group;
  std::string irrep;
  int l = 0;
  int axis = 0;
  CMatrix by_sum;
  CMatrix by_projection;
  double disagreement = 0;

  const CMatrix& value() const { return by_sum; }
};

/// Zero matrices when l does not branch to the irrep. Throws ComputationError
/// when the two expressions disagree beyond 1e-8.
ConnectionComponent connection_component(const FiniteGroup& g, int irrep, int l, int axis);

struct FlatnessOptions {
  double tail = 1e-12;        // exp(-delta l(l+1)) at the truncation
  double threshold = 1e-6;    // |value| at the smallest delta
  double zero_floor = 1e-13;  // magnitudes below this count as zero
};

/// Smallest l with exp(-delta l(l+1)) < tail. Throws ComputationError above ell_cap().
int regularization_cutoff(double delta, double tail);

struct RegularizedEntry {
  double delta = 0;
  int mu = 0;
  int nu = 0;
  int axis = 0;
  cplx value;
};

struct FlatnessReport {
  std::string group;
  std::string irrep;
  std::vector<double> deltas;
  std::vector<int> lmax;        // per delta
  std::vector<double> max_abs;  // per delta, over the requested entries
  std::vector<RegularizedEntry> entries;
  bool decaying = false;
};

/// Damped ratio sum_l e^{-D l(l+1)} (2l+1) A^{a,l}_{mu nu} / sum_l e^{-D l(l+1)} (2l+1) mult(l)
/// for each D in `deltas` (strictly descending, positive). Empty `pairs` means all (mu, nu).
FlatnessReport flatness_scan(const FiniteGroup& g, int irrep, std::vector<std::pair<int, int>> pairs,
                             const std::vector<int>& axes, const std::vector<double>& deltas,
                             const FlatnessOptions& opt = {});

/// Strictly decreasing magnitudes (both below the floor also counts) and a final value below threshold.
bool decay_verdict(const std::vector<double>& magnitudes, const FlatnessOptions& opt = {});

enum class FlatnessReason { Symmetry, Analytics, Numerics, NotFlat };
std::string to_string(FlatnessReason r);

struct SymmetryVerdict {
  bool flat_by_symmetry = false;
  std::string argument;  // empty when undetermined
};

/// Flat by symmetry: one-dimensional irreps of groups whose l = 1 states do not
/// contain the trivial irrep; irreps whose kernel holds, for each axis, a
/// pi-rotation reversing that generator (O e); and I t2.
SymmetryVerdict symmetry_flatness_proof(const FiniteGroup& g, int irrep);
SymmetryVerdict symmetry_flatness_proof(const ContinuousGroup& g, const ContinuousIrrep& r);

/// Which argument settles local flatness for the irrep.
FlatnessReason flatness_reason(const SymmetryGroup& g, const std::string& irrep);

/// max over samples of |tr(D^l(r)^-1 dD^l(r)/dt)| for l = 0..lmax, by central
/// differences with steps h and h/2 combined by one Richardson step. A relative
/// change above 1e-4 between the two steps throws ComputationError.
std::vector<double> asymmetric_flatness_check(int lmax, const std::function<Rotation(double)>& path,
                                              const std::vector<double>& ts, double h = 1e-4);

/// Exact fiber transformation Gamma(g^-1) picked up by |e, mu> under the lab rotation g.
ExactMatrix monodromy_matrix(const FiniteGroup& g, int irrep, int element);
/// Throws InvalidArgument unless rot is an element of g.
ExactMatrix monodromy_matrix(const FiniteGroup& g, int irrep, const Rotation& rot);

/// max_mu |D(g)|e,mu> - sum_nu Gamma^{mu nu}(g^-1)|e,nu>| / |...| on truncated position states.
double monodromy_residual(const IrrepRef& r, int element, int lmax, double delta);

/// One-dimensional continuous irreps: the phase picked up under a lab rotation in the group.
cplx continuous_monodromy(const ContinuousGroup& g, const ContinuousIrrep& r, const Rotation& rot);

struct MonodromyGroup {
  std::string group;
  std::string irrep;
  std::vector<int> kernel;   // element indices; empty for continuous groups
  std::string kernel_label;  // isomorphism class of the kernel
  int kernel_order = 0;      // 0 when infinite
  std::string quotient;      // "C1", "C2", "D3", "T", "O", "I", "Cinf", "Dinf"
  int quotient_order = 0;    // 0 when infinite
  bool non_abelian = false;
};

MonodromyGroup monodromy_group(const FiniteGroup& g, int irrep);
MonodromyGroup monodromy_group(const SymmetryGroup& g, const std::string& irrep);

/// Preimage of G in SU(2): unit quaternions +-q for every element.
/// Index 2i is the stored quaternion of element i, 2i + 1 its negative.
struct BinaryCover {
  GroupPtr base;
  std::vector<std::array<double, 4>> quaternions;
  std::vector<int> projection;
  CayleyTable table;
};

BinaryCover binary_cover(const FiniteGroup& g);

struct ConjectureResult {
  std::string group;
  std::string irrep;
  bool holds = false;
  int cover_order = 0;             // 0 for continuous groups
  std::vector<int> lifted_kernel;  // indices into the cover
  bool kernel_is_double_cover = false;
  bool induced_isomorphism = false;  // projection induces 2G/ker rho -> G/ker Gamma bijectively
  MonodromyGroup monodromy;
  std::string cover_quotient;  // label of pi_1 / ker rho
  std::string witness;
};

/// Lifts Gamma to rho(+-q) = Gamma(g) on the binary cover and compares the quotients.
ConjectureResult conjecture_check(const FiniteGroup& g, int irrep);
ConjectureResult conjecture_check(const SymmetryGroup& g, const std::string& irrep);

}  // namespace molsym
