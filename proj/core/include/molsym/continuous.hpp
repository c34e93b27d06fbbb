#pragma once

#include <optional>
#include <string>
#include <vector>

#include "molsym/group.hpp"

namespace molsym {

/// Irrep of C_inf (label "a" or a signed integer lambda) or D_inf ("a1", "a2", "e<lambda>").
struct ContinuousIrrep {
  std::string label;
  int lambda = 0;  // C_inf charge; D_inf |lambda| of the 2D irreps, 0 for a1/a2
  int dim = 1;
  int flip_sign = 1;  // D_inf 1D irreps: value on the equatorial pi-rotations
};

/// C_inf (rotations about z) or D_inf (plus pi-rotations about equatorial axes).
/// Branching into D^l is closed form; no tables are built.
class ContinuousGroup {
 public:
  enum class Kind { Cinf, Dinf };
  explicit ContinuousGroup(Kind k) : kind_(k) {}

  Kind kind() const { return kind_; }
  std::string name() const { return kind_ == Kind::Cinf ? "Cinf" : "Dinf"; }
  /// Haar volume relative to the SO(3) volume 8 pi^2 convention: 2 pi or 4 pi.
  double volume() const { return kind_ == Kind::Cinf ? kTwoPi : 2 * kTwoPi; }

  ContinuousIrrep irrep(const std::string& label) const;
  /// The one-dimensional irreps: {a} or {a1, a2}.
  std::vector<ContinuousIrrep> one_dim_irreps() const;
  ContinuousIrrep trivial() const { return one_dim_irreps().front(); }

  /// mult_l(Gamma): C_inf lambda -> [|lambda| <= l]; D_inf a1 -> [l even],
  /// a2 -> [l odd], e_lambda -> [lambda <= l].
  int multiplicity(int l, const ContinuousIrrep& r) const;

 private:
  Kind kind_;
};

/// Either a finite group or C_inf / D_inf.
struct SymmetryGroup {
  GroupPtr finite;
  std::optional<ContinuousGroup> continuous;

  bool is_finite() const { return finite != nullptr; }
  std::string name() const { return finite ? finite->name() : continuous->name(); }
};

/// Grammar: C<N>, D<N>, T, O, I, Cinf, Dinf.
SymmetryGroup parse_group(const std::string& name);

}  // namespace molsym
