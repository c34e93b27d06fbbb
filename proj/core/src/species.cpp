#include "molsym/species.hpp"

#include <algorithm>
#include <unsupported/Eigen/KroneckerProduct>

#include "internal.hpp"
#include "molsym/isotypic.hpp"

namespace molsym {

namespace {

BigInt ipow(long long base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

bool mixed(const std::vector<NucleusOrbit>& orbits) {
  bool fermi = false, bose = false;
  for (const auto& o : orbits) {
    if (o.two_s % 2)
      fermi = true;
    else if (o.two_s > 0)
      bose = true;
  }
  return fermi && bose;
}

BigInt spectators_factor(const std::vector<Spectator>& sp) {
  BigInt f = 1;
  for (const auto& s : sp) f *= s.two_s + 1;
  return f;
}

BigInt full_dimension(const std::vector<NucleusOrbit>& orbits) {
  BigInt f = 1;
  for (const auto& o : orbits) f *= ipow(o.two_s + 1, int(o.coords.size()));
  return f;
}

SpeciesTable continuous_species(const ContinuousGroup& cg, const std::vector<NucleusOrbit>& orbits) {
  SpeciesTable t;
  t.group.continuous = cg;
  BigInt fixed = 1, swapped = 1;
  int parity = 0;
  for (const auto& o : orbits) {
    const long long k = o.two_s + 1;
    if (cg.kind() == ContinuousGroup::Kind::Cinf) {
      fixed *= ipow(k, int(o.coords.size()));
      continue;
    }
    if (o.coords.size() != 2) throw InvalidArgument("Dinf orbits must be nuclear pairs on the axis");
    fixed *= k * k;
    swapped *= k;
    parity += o.two_s;
  }
  auto add = [&](const std::string& rot, const std::string& nuc, const BigInt& w) {
    SpeciesDescriptor s;
    s.rot = rot;
    s.nuc = nuc;
    s.sigma = t.sigma;
    s.weight = w;
    s.display = rot + (t.sigma_trivial ? "" : "*");
    s.coupling = CVector::Ones(1);
    (w > 0 ? t.species : t.missing).push_back(s);
  };
  if (cg.kind() == ContinuousGroup::Kind::Cinf) {
    t.sigma = "a";
    add("a", "a", fixed);
    return t;
  }
  t.sigma = parity % 2 ? "a2" : "a1";
  t.sigma_trivial = parity % 2 == 0;
  const BigInt w1 = (fixed + swapped) / 2, w2 = (fixed - swapped) / 2;
  if (t.sigma_trivial) {
    add("a1", "a1", w1);
    add("a2", "a2", w2);
  } else {
    add("a1", "a2", w2);
    add("a2", "a1", w1);
  }
  return t;
}

}  // namespace

int PermAction::cycles(int element, int orbit) const { return detail::cycle_count(perms[element][orbit]); }

int PermAction::sign(int element, int orbit) const { return detail::permutation_sign(perms[element][orbit]); }

PermAction perm_action_from_geometry(const FiniteGroup& g, const std::vector<NucleusOrbit>& orbits, double tol) {
  PermAction a;
  a.group = build_group(g.name());
  for (const auto& o : orbits) a.two_s.push_back(o.two_s);
  a.perms.resize(g.order());
  for (int e = 0; e < g.order(); ++e)
    for (const auto& o : orbits) {
      std::vector<int> p;
      try {
        p = detail::induced_permutation(g.element(e), o.coords, false, tol);
      } catch (const ComputationError&) {
        throw InvalidArgument("orbit of " + o.element + " is not invariant under " + g.name());
      }
      std::vector<int> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("coincident " + o.element + " nuclei");
      a.perms[e].push_back(std::move(p));
    }
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      for (std::size_t o = 0; o < orbits.size(); ++o) {
        const auto &px = a.perms[x][o], &py = a.perms[y][o], &pxy = a.perms[g.mul(x, y)][o];
        for (std::size_t i = 0; i < px.size(); ++i)
          if (pxy[i] != px[py[i]]) throw ComputationError("permutation action is not a homomorphism");
      }
  return a;
}

int spin_statistics_irrep(const PermAction& action) {
  const FiniteGroup& g = *action.group;
  std::vector<Cyclotomic> chars;
  for (const auto& cls : g.classes()) {
    int s = 1;
    for (int o = 0; o < action.orbit_count(); ++o)
      if (action.two_s[o] % 2) s *= action.sign(cls.front(), o);
    chars.emplace_back(s);
  }
  const int r = g.find_irrep(chars);
  if (r < 0) throw ComputationError("spin-statistics sign is not an irrep of " + g.name());
  return r;
}

std::vector<BigInt> nuclear_decomposition(const PermAction& action) {
  const FiniteGroup& g = *action.group;
  std::vector<Cyclotomic> perm_chars;
  for (const auto& cls : g.classes()) {
    BigInt v = 1;
    for (int o = 0; o < action.orbit_count(); ++o) v *= ipow(action.two_s[o] + 1, action.cycles(cls.front(), o));
    perm_chars.emplace_back(v);
  }
  std::vector<BigInt> out;
  for (const auto& r : g.irreps()) {
    const Rational m = character_inner(g, perm_chars, r.characters);
    if (boost::multiprecision::denominator(m) != 1) throw ComputationError("non-integral nuclear weight");
    out.push_back(boost::multiprecision::numerator(m));
  }
  return out;
}

CVector coupling_state(const FiniteGroup& g, int rot, int nuc, int sigma) {
  const Irrep &a = g.irrep(rot), &b = g.irrep(nuc), &s = g.irrep(sigma);
  if (a.dim != b.dim || s.dim != 1) throw InvalidArgument("coupling needs equal dimensions and a 1D target");
  const int n = a.dim * b.dim;
  CMatrix proj = CMatrix::Zero(n, n);
  for (int e = 0; e < g.order(); ++e)
    proj += std::conj(s.numeric[e](0, 0)) * Eigen::kroneckerProduct(a.numeric[e], b.numeric[e]).eval();
  proj /= double(g.order());
  if (std::abs(proj.trace() - 1.0) > 1e-9) throw ComputationError("coupling projector does not have rank one");
  Eigen::Index best;
  proj.colwise().norm().maxCoeff(&best);
  CVector v = proj.col(best).normalized();
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(v[i]) > 1e-12) {
      v *= std::abs(v[i]) / v[i];
      v[i] = std::abs(v[i]);
      break;
    }
  return v;
}

SpeciesTable enumerate_species(const FiniteGroup& g, int sigma, const std::vector<BigInt>& weights) {
  SpeciesTable t;
  t.group.finite = build_group(g.name());
  const Irrep& s = g.irrep(sigma);
  t.sigma = s.label;
  t.sigma_trivial = s.is_trivial();
  for (int rot = 0; rot < int(g.irreps().size()); ++rot) {
    std::vector<Cyclotomic> chars;
    for (std::size_t c = 0; c < g.classes().size(); ++c)
      chars.push_back(g.irrep(rot).characters[c].conj() * s.characters[c]);
    const int nuc = g.find_irrep(chars);
    if (nuc < 0) throw ComputationError("conj(Gamma) (x) sigma is not irreducible");
    SpeciesDescriptor d;
    d.rot = g.irrep(rot).label;
    d.nuc = g.irrep(nuc).label;
    d.sigma = s.label;
    d.rot_index = rot;
    d.nuc_index = nuc;
    d.dim = g.irrep(rot).dim;
    d.weight = weights.at(nuc);
    d.display = d.rot + (t.sigma_trivial ? "" : "*");
    d.coupling = coupling_state(g, rot, nuc, sigma);
    (d.weight > 0 ? t.species : t.missing).push_back(std::move(d));
  }
  return t;
}

SpeciesTable molecule_species(const SymmetryGroup& g, const std::vector<NucleusOrbit>& orbits,
                              const std::vector<Spectator>& spectators) {
  SpeciesTable t;
  if (g.is_finite()) {
    const PermAction action = perm_action_from_geometry(*g.finite, orbits);
    t = enumerate_species(*g.finite, spin_statistics_irrep(action), nuclear_decomposition(action));
  } else {
    t = continuous_species(*g.continuous, orbits);
  }
  t.spectator_factor = spectators_factor(spectators);
  t.mixed_statistics = mixed(orbits);
  t.nuclear_dimension = full_dimension(orbits);
  return t;
}

SpeciesTable molecule_species(const MoleculePreset& preset) {
  return molecule_species(parse_group(preset.group), preset.orbits, preset.spectators);
}

int species_multiplicity(const SpeciesTable& table, const SpeciesDescriptor& s, int l) {
  return multiplicity(l, table.group, s.rot);
}

Rational entangled_fraction(const SpeciesTable& table, int lmax, FractionWeight w) {
  BigInt num = 0, den = 0;
  for (const auto& s : table.species)
    for (int l = 0; l <= lmax; ++l) {
      const std::string& label = w == FractionWeight::NuclearIrrep ? s.nuc : s.rot;
      const BigInt c = multiplicity(l, table.group, label) * s.weight;
      den += c;
      if (s.dim > 1) num += c;
    }
  if (den == 0) throw ComputationError("no states below the cutoff");
  return Rational(num, den);
}

Rational entangled_fraction_limit(const SpeciesTable& table) {
  BigInt num = 0, den = 0;
  for (const auto& s : table.species) {
    den += s.dim * s.weight;
    if (s.dim > 1) num += s.dim * s.weight;
  }
  if (den == 0) throw ComputationError("molecule has no species");
  return Rational(num, den);
}

EntangledBasisState entangled_basis_state(const SpeciesTable& table, const SpeciesDescriptor& s, int l, int m,
                                          int kappa, const BigInt& chi) {
  check_ell(l);
  const int mult = species_multiplicity(table, s, l);
  if (std::abs(m) > l || kappa < 0 || kappa >= mult || chi < 0 || chi >= s.weight)
    throw InvalidArgument("basis-state index out of range for species " + s.display);
  EntangledBasisState b;
  b.l = l;
  b.m = m;
  b.kappa = kappa;
  b.chi = chi;
  const int d = s.dim;
  b.coefficients =
      Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(s.coupling.data(), d, d);
  b.rot_frame = CMatrix::Zero(2 * l + 1, d);
  if (table.group.is_finite()) {
    const auto basis = adapted_basis(l, *table.group.finite);
    for (int nu = 0; nu < d; ++nu) b.rot_frame.col(nu) = basis->V.col(basis->column(s.rot_index, nu, kappa));
  } else {
    const ContinuousIrrep r = table.group.continuous->irrep(s.rot);
    b.rot_frame(r.lambda + l, 0) = 1;
  }
  return b;
}

int schmidt_rank(const CMatrix& coefficients, double tol) {
  Eigen::JacobiSVD<CMatrix> svd(coefficients);
  return int((svd.singularValues().array() > tol).count());
}

}  // namespace molsym
