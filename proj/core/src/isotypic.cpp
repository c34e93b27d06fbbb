#include "molsym/isotypic.hpp"

#include <map>
#include <shared_mutex>

#include "molsym/wigner.hpp"

namespace molsym {

namespace {

template <class V>
class KeyedCache {
 public:
  template <class F>
  const V& get(const FiniteGroup* g, int l, F&& make) {
    const Key key{g, l};
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    return map_.emplace(key, make()).first->second;
  }

 private:
  using Key = std::pair<const FiniteGroup*, int>;
  std::shared_mutex mu_;
  std::map<Key, V> map_;
};

std::vector<int> compute_multiplicities(int l, const FiniteGroup& g) {
  std::vector<Cyclotomic> chi_l;
  for (const auto& cls : g.classes()) chi_l.push_back(wigner_character_exact(g, cls.front(), l));
  std::vector<int> out;
  int total = 0;
  for (const auto& r : g.irreps()) {
    const Rational m = character_inner(g, r.characters, chi_l);
    if (boost::multiprecision::denominator(m) != 1 || m < 0)
      throw ComputationError("non-integral multiplicity for " + r.label);
    out.push_back(static_cast<int>(boost::multiprecision::numerator(m)));
    total += out.back() * r.dim;
  }
  if (total != 2 * l + 1) throw ComputationError("dimension sum rule violated at l=" + std::to_string(l));
  return out;
}

AdaptedBasis cyclic_basis(int l, const FiniteGroup& g) {
  const int N = g.param();
  const int n = 2 * l + 1;
  AdaptedBasis b;
  b.l = l;
  b.V = CMatrix::Zero(n, n);
  int offset = 0;
  const auto& mult = multiplicities(l, g);
  for (int r = 0; r < int(g.irreps().size()); ++r) {
    if (mult[r] == 0) continue;
    b.blocks.push_back({r, 1, mult[r], offset});
    const int charge = g.irrep(r).charge;
    for (int w = -l; w <= l; ++w)
      if (((w - charge) % N + N) % N == 0) b.V(w + l, offset++) = 1;
  }
  return b;
}

AdaptedBasis projected_basis(int l, const FiniteGroup& g) {
  const int n = 2 * l + 1;
  const int order = g.order();
  std::vector<CMatrix> dstar(order);
  for (int a = 0; a < order; ++a) dstar[a] = wigner_D(l, g.element(a)).conjugate();

  AdaptedBasis b;
  b.l = l;
  b.V = CMatrix::Zero(n, n);
  const auto& mult = multiplicities(l, g);
  int offset = 0;
  for (int r = 0; r < int(g.irreps().size()); ++r) {
    const int M = mult[r];
    if (M == 0) continue;
    const Irrep& irrep = g.irrep(r);
    const int d = irrep.dim;
    const double scale = double(d) / order;

    // P^{00} = (d/|G|) sum_g conj(Gamma_00(g)) conj(D(g)); seeds are its columns.
    CMatrix p00 = CMatrix::Zero(n, n);
    for (int a = 0; a < order; ++a) p00 += std::conj(irrep.numeric[a](0, 0)) * dstar[a];
    p00 *= scale;

    // pivoted Gram-Schmidt, candidate order = descending omega
    CMatrix cand(n, n);
    for (int k = 0; k < n; ++k) cand.col(k) = p00.col(n - 1 - k);
    CMatrix first(n, M);
    std::vector<char> used(n, 0);
    for (int kappa = 0; kappa < M; ++kappa) {
      int best = -1;
      double best_norm = 0;
      for (int k = 0; k < n; ++k) {
        if (used[k]) continue;
        const double nrm = cand.col(k).norm();
        if (nrm > best_norm * (1 + 1e-10) + 1e-300) {
          best = k;
          best_norm = nrm;
        }
      }
      if (best < 0 || best_norm < 1e-7)
        throw ComputationError("adapted basis rank deficiency for " + irrep.label + " at l=" + std::to_string(l));
      used[best] = 1;
      CVector v = cand.col(best) / best_norm;
      for (int j = 0; j < kappa; ++j) v -= first.col(j).dot(v) * first.col(j);
      v.normalize();
      first.col(kappa) = v;
      for (int k = 0; k < n; ++k)
        if (!used[k]) cand.col(k) -= v.dot(cand.col(k)) * v;
    }

    // e_{nu kappa} = P^{nu 0} e_{0 kappa}
    std::vector<CMatrix> moved(order);
    for (int a = 0; a < order; ++a) moved[a] = dstar[a] * first;
    for (int nu = 0; nu < d; ++nu) {
      CMatrix block = CMatrix::Zero(n, M);
      if (nu == 0) {
        block = first;
      } else {
        for (int a = 0; a < order; ++a) block += std::conj(irrep.numeric[a](nu, 0)) * moved[a];
        block *= scale;
      }
      b.V.middleCols(offset + nu * M, M) = block;
    }
    b.blocks.push_back({r, d, M, offset});
    offset += d * M;
  }
  if (offset != n) throw ComputationError("adapted basis does not fill D^" + std::to_string(l));
  return b;
}

KeyedCache<std::vector<int>>& mult_cache() {
  static KeyedCache<std::vector<int>> c;
  return c;
}

KeyedCache<std::shared_ptr<const AdaptedBasis>>& basis_cache() {
  static KeyedCache<std::shared_ptr<const AdaptedBasis>> c;
  return c;
}

}  // namespace

Cyclotomic wigner_character_exact(const FiniteGroup& g, int element, int l) {
  const int n = g.cyclotomic_order();
  const long long s = g.angle_steps(element);
  std::vector<long long> count(n, 0);
  for (int m = -l; m <= l; ++m) ++count[((s * m) % n + n) % n];
  Cyclotomic chi;
  for (int r = 0; r < n; ++r)
    if (count[r]) chi += Cyclotomic::root(n, r) * Rational(count[r]);
  return chi;
}

const std::vector<int>& multiplicities(int l, const FiniteGroup& g) {
  check_ell(l);
  return mult_cache().get(&g, l, [&] { return compute_multiplicities(l, g); });
}

int multiplicity(int l, const FiniteGroup& g, int irrep) { return multiplicities(l, g).at(irrep); }

int multiplicity(int l, const SymmetryGroup& g, const std::string& irrep) {
  if (g.is_finite()) return multiplicity(l, *g.finite, g.finite->irrep_index(irrep));
  check_ell(l);
  return g.continuous->multiplicity(l, g.continuous->irrep(irrep));
}

const AdaptedBlock* AdaptedBasis::block(int irrep) const {
  for (const auto& b : blocks)
    if (b.irrep == irrep) return &b;
  return nullptr;
}

int AdaptedBasis::column(int irrep, int nu, int kappa) const {
  const AdaptedBlock* b = block(irrep);
  if (!b || nu < 0 || nu >= b->dim || kappa < 0 || kappa >= b->mult)
    throw InvalidArgument("adapted-basis index out of range");
  return b->offset + nu * b->mult + kappa;
}

std::shared_ptr<const AdaptedBasis> adapted_basis(int l, const FiniteGroup& g) {
  check_ell(l);
  return basis_cache().get(&g, l, [&] {
    return std::make_shared<const AdaptedBasis>(g.kind() == GroupKind::Cyclic ? cyclic_basis(l, g)
                                                                              : projected_basis(l, g));
  });
}

std::vector<MomentumIndex> rotational_states(const FiniteGroup& g, int irrep, int lmax) {
  std::vector<MomentumIndex> out;
  for (int l = 0; l <= lmax; ++l) {
    const int M = multiplicity(l, g, irrep);
    for (int m = -l; m <= l; ++m)
      for (int k = 0; k < M; ++k) out.push_back({l, m, k});
  }
  return out;
}

std::vector<MomentumIndex> rotational_states(const ContinuousGroup& g, const ContinuousIrrep& r, int lmax) {
  std::vector<MomentumIndex> out;
  for (int l = 0; l <= lmax; ++l) {
    if (!g.multiplicity(l, r)) continue;
    for (int m = -l; m <= l; ++m) out.push_back({l, m, 0});
  }
  return out;
}

}  // namespace molsym
