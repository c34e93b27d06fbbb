#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "molsym/common.hpp"
#include "molsym/cyclotomic.hpp"
#include "molsym/rotation.hpp"

namespace molsym {

/// Square matrix over a cyclotomic field, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int dim) : dim_(dim), a_(std::size_t(dim) * dim) {}
  static ExactMatrix identity(int dim);

  int dim() const { return dim_; }
  Cyclotomic& operator()(int i, int j) { return a_[std::size_t(i) * dim_ + j]; }
  const Cyclotomic& operator()(int i, int j) const { return a_[std::size_t(i) * dim_ + j]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator*(const Cyclotomic& s) const;
  bool operator==(const ExactMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }
  Cyclotomic trace() const;
  ExactMatrix adjoint() const;
  ExactMatrix galois(long long a) const;
  ExactMatrix lifted(int n) const;
  bool is_identity() const;
  CMatrix to_complex() const;

 private:
  int dim_ = 0;
  std::vector<Cyclotomic> a_;
};

struct Irrep {
  /// Mulliken label in ASCII: "a", "b", "a1", "b2", "e", "e2", "1e", "2e3", "t", "t1", "g", "h".
  std::string label;
  std::vector<std::string> aliases;
  int dim = 1;
  std::vector<ExactMatrix> matrices;   // one per group element
  std::vector<CMatrix> numeric;        // floating copies of `matrices`
  std::vector<Cyclotomic> characters;  // one per conjugacy class
  /// Cyclic groups only: Gamma(z, 2 pi k / N) = exp(2 pi i charge k / N).
  int charge = 0;

  bool matches(const std::string& name) const;
  bool is_trivial() const;
};

/// Index-based multiplication table of a finite group.
struct CayleyTable {
  int size = 0;
  std::vector<int> mul;
  std::vector<int> inv;
  std::vector<int> orders;

  int operator()(int a, int b) const { return mul[std::size_t(a) * size + b]; }
  bool is_abelian() const;
  /// Builds the table from a product rule and an element finder; element 0 must be the identity.
  static CayleyTable from(int size, const std::function<int(int, int)>& product);
};

enum class GroupKind { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

/// Finite rotation group in its canonical embedding.
///
/// C_N: rotations Rz(2 pi k / N), k = 0..N-1.
/// D_N: the C_N elements followed by Rz(2 pi k / N) Ry(pi).
/// T, O: cube frame, generated by the 3-fold (x -> y -> z) and Rz(pi) or Rz(pi/2).
/// I: T plus the 5-fold with quaternion (phi, 1, 0, 1/phi)/2 about (phi, 0, 1).
class FiniteGroup {
 public:
  const std::string& name() const { return name_; }
  GroupKind kind() const { return kind_; }
  /// N for C_N and D_N, 0 otherwise.
  int param() const { return param_; }
  int order() const { return table_.size; }
  /// Cyclotomic order n = lcm(element orders, 4) carrying every exact entry.
  int cyclotomic_order() const { return cyc_order_; }

  const std::vector<Rotation>& elements() const { return elements_; }
  const Rotation& element(int i) const { return elements_[i]; }
  const ExactMatrix& exact_rotation(int i) const { return exact_[i]; }
  const CayleyTable& table() const { return table_; }
  int mul(int a, int b) const { return table_(a, b); }
  int inverse(int a) const { return table_.inv[a]; }
  int element_order(int a) const { return table_.orders[a]; }
  /// Rotation angle of element a as 2 pi * steps / cyclotomic_order(), in [0, pi].
  int angle_steps(int a) const { return angle_steps_[a]; }
  bool is_abelian() const { return table_.is_abelian(); }

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }

  const std::vector<Irrep>& irreps() const { return irreps_; }
  const Irrep& irrep(int r) const { return irreps_.at(r); }
  /// Index of the irrep with this label or alias; throws InvalidArgument.
  int irrep_index(const std::string& label) const;
  /// Index of the irrep whose character vector equals `chars`, or -1.
  int find_irrep(const std::vector<Cyclotomic>& chars) const;

  /// Element index within tolerance on rotation matrices, or -1.
  int find(const Rotation& r, double tol = 1e-9) const;

  /// Generator element indices used by the construction.
  const std::vector<int>& generators() const { return generators_; }

 private:
  friend std::shared_ptr<const FiniteGroup> build_group(const std::string& name);
  friend struct GroupBuilder;
  FiniteGroup() = default;

  std::string name_;
  GroupKind kind_ = GroupKind::Cyclic;
  int param_ = 0;
  int cyc_order_ = 4;
  std::vector<Rotation> elements_;
  std::vector<ExactMatrix> exact_;
  CayleyTable table_;
  std::vector<int> angle_steps_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<Irrep> irreps_;
  std::vector<int> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// "C<N>" (N >= 1), "D<N>" (N >= 2), "T", "O", "I". Cached and shared.
GroupPtr build_group(const std::string& name);

/// Exact <chi1, chi2> = (1/|G|) sum_g chi1(g) conj(chi2(g)), over class vectors.
Rational character_inner(const FiniteGroup& g, const std::vector<Cyclotomic>& chi1,
                         const std::vector<Cyclotomic>& chi2);

/// Multiplicity of every irrep in r1 (x) r2, keyed by irrep index (zeros omitted).
std::map<int, int> tensor_decompose(const FiniteGroup& g, int r1, int r2);

/// Character vector of r1 (x) r2.
std::vector<Cyclotomic> tensor_character(const FiniteGroup& g, int r1, int r2);

struct QuotientInfo {
  std::string label;  // "C1", "C3", "D4", "T", "O", "I", or "order-<n>" if unmatched
  int order = 1;
  bool abelian = true;
};

/// Identifies table / kernel among C_M, D_M, T, O, I by order, commutativity and
/// the element-order multiset. Throws InvalidArgument unless kernel is a normal subgroup.
QuotientInfo subgroup_quotient(const CayleyTable& table, const std::vector<int>& kernel);
QuotientInfo subgroup_quotient(const FiniteGroup& g, const std::vector<int>& kernel);

}  // namespace molsym
