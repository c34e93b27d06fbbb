#include "molsym/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "internal.hpp"
#include "molsym/wigner.hpp"

namespace molsym {

namespace {

constexpr double kComponentTol = 1e-8;

const Irrep& checked_irrep(const FiniteGroup& g, int irrep) {
  if (irrep < 0 || irrep >= int(g.irreps().size()))
    throw InvalidArgument("irrep index " + std::to_string(irrep) + " out of range for " + g.name());
  return g.irrep(irrep);
}

void check_axis(int axis) {
  if (axis < 0 || axis > 2) throw InvalidArgument("axis must be 0, 1 or 2");
}

// Components for all three axes at one l.
struct AxisComponents {
  std::array<CMatrix, 3> by_sum;
  std::array<CMatrix, 3> by_projection;
  double disagreement = 0;
};

AxisComponents components_at(const FiniteGroup& g, int irrep, int l) {
  const Irrep& r = checked_irrep(g, irrep);
  const int d = r.dim;
  AxisComponents out;
  for (int a = 0; a < 3; ++a) {
    out.by_sum[a] = CMatrix::Zero(d, d);
    out.by_projection[a] = CMatrix::Zero(d, d);
  }
  const auto basis = adapted_basis(l, g);
  const AdaptedBlock* blk = basis->block(irrep);
  if (!blk) return out;

  const MomentumGenerators L = generators(l);
  const double scale = double(g.order()) / d;
  const CMatrix W = basis->V.conjugate();
  for (int a = 0; a < 3; ++a) {
    for (int mu = 0; mu < d; ++mu)
      for (int nu = 0; nu < d; ++nu) {
        cplx s = 0;
        for (int k = 0; k < blk->mult; ++k)
          s += W.col(blk->offset + mu * blk->mult + k).dot(L[a] * W.col(blk->offset + nu * blk->mult + k));
        out.by_sum[a](mu, nu) = scale * s;
      }
  }

  for (int e = 0; e < g.order(); ++e) {
    const CMatrix D = wigner_D(l, g.element(e));
    for (int a = 0; a < 3; ++a) {
      const cplx tr = D.cwiseProduct(L[a].transpose()).sum();
      out.by_projection[a] += tr * r.numeric[e].transpose();
    }
  }
  for (int a = 0; a < 3; ++a)
    out.disagreement = std::max(out.disagreement, (out.by_sum[a] - out.by_projection[a]).cwiseAbs().maxCoeff());
  if (out.disagreement > kComponentTol)
    throw ComputationError("connection expressions disagree by " + std::to_string(out.disagreement) + " for " +
                           g.name() + " " + r.label + " at l = " + std::to_string(l));
  return out;
}

std::vector<int> kernel_of(const FiniteGroup& g, int irrep) {
  const Irrep& r = checked_irrep(g, irrep);
  std::vector<int> ker;
  for (int e = 0; e < g.order(); ++e)
    if (r.matrices[e].is_identity()) ker.push_back(e);
  return ker;
}

std::string kernel_label(const FiniteGroup& g, const std::vector<int>& ker) {
  std::map<int, int> pos;
  for (int i = 0; i < int(ker.size()); ++i) pos[ker[i]] = i;
  const CayleyTable t = CayleyTable::from(int(ker.size()), [&](int a, int b) { return pos.at(g.mul(ker[a], ker[b])); });
  return subgroup_quotient(t, {0}).label;
}

bool is_dihedral_2d(const FiniteGroup& g, int irrep) {
  return g.kind() == GroupKind::Dihedral && g.irrep(irrep).dim == 2;
}

}  // namespace

int parse_axis(char c) {
  switch (c) {
    case 'x':
    case 'X':
      return 0;
    case 'y':
    case 'Y':
      return 1;
    case 'z':
    case 'Z':
      return 2;
    default:
      throw InvalidArgument(std::string("unknown axis '") + c + "'");
  }
}

char axis_name(int axis) {
  check_axis(axis);
  return "xyz"[axis];
}

ConnectionComponent connection_component(const FiniteGroup& g, int irrep, int l, int axis) {
  check_ell(l);
  check_axis(axis);
  AxisComponents c = components_at(g, irrep, l);
  ConnectionComponent out;
  out.group = g.name();
  out.irrep = g.irrep(irrep).label;
  out.l = l;
  out.axis = axis;
  out.by_sum = std::move(c.by_sum[axis]);
  out.by_projection = std::move(c.by_projection[axis]);
  out.disagreement = (out.by_sum - out.by_projection).cwiseAbs().maxCoeff();
  return out;
}

int regularization_cutoff(double delta, double tail) {
  if (!(delta > 0) || !(tail > 0 && tail < 1)) throw InvalidArgument("delta and tail must be positive, tail < 1");
  const double need = -std::log(tail) / delta;
  int l = 0;
  while (double(l) * (l + 1) <= need) {
    if (++l > ell_cap())
      throw ComputationError("tail bound " + std::to_string(tail) + " at delta " + std::to_string(delta) +
                             " needs l above the cap " + std::to_string(ell_cap()));
  }
  return l;
}

bool decay_verdict(const std::vector<double>& m, const FlatnessOptions& opt) {
  if (m.empty()) return false;
  for (std::size_t i = 1; i < m.size(); ++i) {
    const bool both_zero = m[i] <= opt.zero_floor && m[i - 1] <= opt.zero_floor;
    if (!(m[i] < m[i - 1]) && !both_zero) return false;
  }
  return m.back() < opt.threshold;
}

FlatnessReport flatness_scan(const FiniteGroup& g, int irrep, std::vector<std::pair<int, int>> pairs,
                             const std::vector<int>& axes, const std::vector<double>& deltas,
                             const FlatnessOptions& opt) {
  const Irrep& r = checked_irrep(g, irrep);
  if (deltas.empty()) throw InvalidArgument("delta grid is empty");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0)) throw InvalidArgument("delta values must be positive");
    if (i > 0 && !(deltas[i] < deltas[i - 1])) throw InvalidArgument("delta grid must be strictly descending");
  }
  if (axes.empty()) throw InvalidArgument("no axes requested");
  for (int a : axes) check_axis(a);
  if (pairs.empty())
    for (int mu = 0; mu < r.dim; ++mu)
      for (int nu = 0; nu < r.dim; ++nu) pairs.emplace_back(mu, nu);
  for (auto [mu, nu] : pairs)
    if (mu < 0 || nu < 0 || mu >= r.dim || nu >= r.dim) throw InvalidArgument("fiber index out of range");

  FlatnessReport rep;
  rep.group = g.name();
  rep.irrep = r.label;
  rep.deltas = deltas;
  int top = 0;
  for (double d : deltas) {
    rep.lmax.push_back(regularization_cutoff(d, opt.tail));
    top = std::max(top, rep.lmax.back());
  }

  std::vector<AxisComponents> comp(top + 1);
  detail::parallel_for(top + 1, [&](int l) { comp[l] = components_at(g, irrep, l); });

  for (std::size_t k = 0; k < deltas.size(); ++k) {
    const double delta = deltas[k];
    double den = 0;
    for (int l = 0; l <= rep.lmax[k]; ++l)
      den += std::exp(-delta * l * (l + 1)) * (2 * l + 1) * multiplicity(l, g, irrep);
    if (!(den > 0)) throw ComputationError("regularized normalization vanished");
    double worst = 0;
    for (int a : axes)
      for (auto [mu, nu] : pairs) {
        cplx num = 0;
        for (int l = 0; l <= rep.lmax[k]; ++l)
          num += std::exp(-delta * l * (l + 1)) * (2 * l + 1) * comp[l].by_sum[a](mu, nu);
        const cplx v = num / den;
        rep.entries.push_back({delta, mu, nu, a, v});
        worst = std::max(worst, std::abs(v));
      }
    rep.max_abs.push_back(worst);
  }
  rep.decaying = decay_verdict(rep.max_abs, opt);
  return rep;
}

std::string to_string(FlatnessReason r) {
  switch (r) {
    case FlatnessReason::Symmetry:
      return "symmetry";
    case FlatnessReason::Analytics:
      return "analytics";
    case FlatnessReason::Numerics:
      return "numerics";
    case FlatnessReason::NotFlat:
      return "not flat";
  }
  return "?";
}

SymmetryVerdict symmetry_flatness_proof(const FiniteGroup& g, int irrep) {
  const Irrep& r = checked_irrep(g, irrep);
  int trivial = 0;
  while (!g.irrep(trivial).is_trivial()) ++trivial;
  if (r.dim == 1 && multiplicity(1, g, trivial) == 0)
    return {true, "l = 1 does not contain the trivial irrep, so the traced connection vanishes"};

  const std::vector<int> ker = kernel_of(g, irrep);
  bool flips_all = true;
  for (int a = 0; a < 3 && flips_all; ++a) {
    bool found = false;
    for (int e : ker) {
      const Eigen::Matrix3d R = g.element(e).matrix();
      Eigen::RowVector3d want = Eigen::RowVector3d::Zero();
      want[a] = -1;
      if ((R.row(a) - want).cwiseAbs().maxCoeff() < 1e-9) found = true;
    }
    flips_all = found;
  }
  if (flips_all && r.dim > 1)
    return {true, "the kernel contains pi-rotations reversing each angular momentum generator"};

  if (g.kind() == GroupKind::Icosahedral && r.label == "t2") return {true, "automatic protection"};
  return {};
}

SymmetryVerdict symmetry_flatness_proof(const ContinuousGroup& g, const ContinuousIrrep& r) {
  if (g.kind() == ContinuousGroup::Kind::Dinf && r.dim == 1)
    return {true, "l = 1 does not contain the trivial irrep, so the traced connection vanishes"};
  return {};
}

FlatnessReason flatness_reason(const SymmetryGroup& sg, const std::string& label) {
  if (!sg.is_finite()) {
    const ContinuousGroup& c = *sg.continuous;
    const ContinuousIrrep r = c.irrep(label);
    if (symmetry_flatness_proof(c, r).flat_by_symmetry) return FlatnessReason::Symmetry;
    if (c.kind() == ContinuousGroup::Kind::Cinf && r.lambda == 0) return FlatnessReason::Analytics;
    return FlatnessReason::NotFlat;
  }
  const FiniteGroup& g = *sg.finite;
  const int idx = g.irrep_index(label);
  if (symmetry_flatness_proof(g, idx).flat_by_symmetry) return FlatnessReason::Symmetry;
  if (g.kind() == GroupKind::Cyclic || is_dihedral_2d(g, idx)) return FlatnessReason::Analytics;
  return FlatnessReason::Numerics;
}

std::vector<double> asymmetric_flatness_check(int lmax, const std::function<Rotation(double)>& path,
                                              const std::vector<double>& ts, double h) {
  check_ell(lmax);
  if (!(h > 0)) throw InvalidArgument("finite-difference step must be positive");
  std::vector<double> out(lmax + 1, 0.0);
  for (int l = 0; l <= lmax; ++l) {
    for (double t : ts) {
      const CMatrix D = wigner_D(l, path(t));
      const CMatrix d1 = (wigner_D(l, path(t + h)) - wigner_D(l, path(t - h))) / (2 * h);
      const CMatrix d2 = (wigner_D(l, path(t + h / 2)) - wigner_D(l, path(t - h / 2))) / h;
      const double scale = std::max(1.0, d2.cwiseAbs().maxCoeff());
      if ((d1 - d2).cwiseAbs().maxCoeff() > 1e-4 * scale)
        throw ComputationError("finite-difference step " + std::to_string(h) +
                               " too large at l = " + std::to_string(l));
      // Richardson step: the h^2 error of the two central differences cancels
      const CMatrix d = (4 * d2 - d1) / 3;
      out[l] = std::max(out[l], std::abs((D.adjoint() * d).trace()));
    }
  }
  return out;
}

ExactMatrix monodromy_matrix(const FiniteGroup& g, int irrep, int element) {
  const Irrep& r = checked_irrep(g, irrep);
  if (element < 0 || element >= g.order())
    throw InvalidArgument("element " + std::to_string(element) + " is not in " + g.name());
  return r.matrices[g.inverse(element)];
}

ExactMatrix monodromy_matrix(const FiniteGroup& g, int irrep, const Rotation& rot) {
  const int e = g.find(rot, 1e-7);
  if (e < 0) throw InvalidArgument("rotation is not an element of " + g.name());
  return monodromy_matrix(g, irrep, e);
}

double monodromy_residual(const IrrepRef& r, int element, int lmax, double delta) {
  if (!r.group.is_finite()) throw InvalidArgument("monodromy residual needs a finite group");
  const FiniteGroup& g = *r.group.finite;
  const CMatrix M = monodromy_matrix(g, r.index, element).to_complex();
  std::vector<PositionState> states;
  for (int mu = 0; mu < r.dim; ++mu) states.push_back(position_state(r, Rotation(), mu, lmax, delta));
  double worst = 0;
  for (int mu = 0; mu < r.dim; ++mu) {
    const PositionState moved = rotate_lab(states[mu], g.element(element));
    CVector expect = CVector::Zero(moved.coeffs.size());
    for (int nu = 0; nu < r.dim; ++nu) expect += M(mu, nu) * states[nu].coeffs;
    worst = std::max(worst, (moved.coeffs - expect).norm() / expect.norm());
  }
  return worst;
}

cplx continuous_monodromy(const ContinuousGroup& g, const ContinuousIrrep& r, const Rotation& rot) {
  if (r.dim != 1) throw InvalidArgument("continuous monodromy is defined here for one-dimensional irreps");
  const Eigen::Vector3d z = rot.apply({0, 0, 1});
  if ((z - Eigen::Vector3d(0, 0, 1)).norm() < 1e-9) {
    // Gamma_lambda(z, phi) = exp(i lambda phi); the monodromy is its inverse.
    const Eigen::Vector3d x = rot.apply({1, 0, 0});
    const double phi = std::atan2(x.y(), x.x());
    return std::polar(1.0, -r.lambda * phi);
  }
  if (g.kind() == ContinuousGroup::Kind::Dinf && (z + Eigen::Vector3d(0, 0, 1)).norm() < 1e-9)
    return double(r.flip_sign);
  throw InvalidArgument("rotation is not an element of " + g.name());
}

MonodromyGroup monodromy_group(const FiniteGroup& g, int irrep) {
  MonodromyGroup out;
  out.group = g.name();
  out.irrep = checked_irrep(g, irrep).label;
  out.kernel = kernel_of(g, irrep);
  out.kernel_order = int(out.kernel.size());
  out.kernel_label = kernel_label(g, out.kernel);
  const QuotientInfo q = subgroup_quotient(g, out.kernel);
  out.quotient = q.label;
  out.quotient_order = q.order;
  out.non_abelian = !q.abelian;
  return out;
}

MonodromyGroup monodromy_group(const SymmetryGroup& sg, const std::string& label) {
  if (sg.is_finite()) return monodromy_group(*sg.finite, sg.finite->irrep_index(label));
  const ContinuousGroup& c = *sg.continuous;
  const ContinuousIrrep r = c.irrep(label);
  MonodromyGroup out;
  out.group = c.name();
  out.irrep = r.label;
  const bool cinf = c.kind() == ContinuousGroup::Kind::Cinf;
  const int lam = std::abs(r.lambda);
  if (r.dim == 1 && lam == 0) {
    if (cinf || r.flip_sign == 1) {
      out.kernel_label = c.name();
      out.quotient = "C1";
      out.quotient_order = 1;
    } else {
      out.kernel_label = "Cinf";
      out.quotient = "C2";
      out.quotient_order = 2;
    }
    return out;
  }
  // Kernel C_|lambda|; the quotient is again C_inf or D_inf.
  out.kernel_label = "C" + std::to_string(lam);
  out.kernel_order = lam;
  out.quotient = c.name();
  out.non_abelian = !cinf;
  return out;
}

BinaryCover binary_cover(const FiniteGroup& g) {
  BinaryCover bc;
  bc.base = build_group(g.name());
  const int n = g.order();
  for (int e = 0; e < n; ++e) {
    auto q = g.element(e).quaternion();
    bc.quaternions.push_back(q);
    for (double& c : q) c = -c;
    bc.quaternions.push_back(q);
    bc.projection.push_back(e);
    bc.projection.push_back(e);
  }
  auto as_rot = [](const std::array<double, 4>& q) { return Rotation(q[0], q[1], q[2], q[3]); };
  bc.table = CayleyTable::from(2 * n, [&](int a, int b) {
    const Rotation p = as_rot(bc.quaternions[a]) * as_rot(bc.quaternions[b]);
    const int e = g.mul(bc.projection[a], bc.projection[b]);
    const auto& q = bc.quaternions[2 * e];
    const double dot = p.w() * q[0] + p.x() * q[1] + p.y() * q[2] + p.z() * q[3];
    if (std::abs(std::abs(dot) - 1) > 1e-9) return -1;
    return dot > 0 ? 2 * e : 2 * e + 1;
  });
  return bc;
}

ConjectureResult conjecture_check(const FiniteGroup& g, int irrep) {
  ConjectureResult out;
  out.group = g.name();
  out.irrep = checked_irrep(g, irrep).label;
  out.monodromy = monodromy_group(g, irrep);
  const BinaryCover bc = binary_cover(g);
  const int n2 = bc.table.size;
  out.cover_order = n2;

  // rho(+-q) = Gamma(g) is a homomorphism iff the projection is one.
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b)
      if (bc.projection[bc.table(a, b)] != g.mul(bc.projection[a], bc.projection[b]))
        throw ComputationError("binary cover projection is not a homomorphism");

  std::vector<char> in_ker(g.order(), 0);
  for (int e : out.monodromy.kernel) in_ker[e] = 1;
  const Irrep& r = g.irrep(irrep);
  for (int i = 0; i < n2; ++i)
    if (r.matrices[bc.projection[i]].is_identity()) out.lifted_kernel.push_back(i);

  std::vector<int> preimage;
  for (int i = 0; i < n2; ++i)
    if (in_ker[bc.projection[i]]) preimage.push_back(i);
  out.kernel_is_double_cover = out.lifted_kernel == preimage &&
                               out.lifted_kernel.size() == 2 * out.monodromy.kernel.size() &&
                               std::binary_search(out.lifted_kernel.begin(), out.lifted_kernel.end(), 1);

  const QuotientInfo cq = subgroup_quotient(bc.table, out.lifted_kernel);
  out.cover_quotient = cq.label;

  // Coset maps: cover coset of i -> base coset of projection(i) must be a bijection.
  auto coset_ids = [](const CayleyTable& t, const std::vector<int>& ker) {
    std::vector<int> id(t.size, -1);
    int next = 0;
    for (int x = 0; x < t.size; ++x) {
      if (id[x] >= 0) continue;
      for (int k : ker) id[t(x, k)] = next;
      ++next;
    }
    return std::make_pair(id, next);
  };
  const auto [cover_id, cover_count] = coset_ids(bc.table, out.lifted_kernel);
  const auto [base_id, base_count] = coset_ids(g.table(), out.monodromy.kernel);
  std::vector<int> image(cover_count, -1);
  bool ok = cover_count == base_count;
  for (int i = 0; i < n2 && ok; ++i) {
    int& slot = image[cover_id[i]];
    const int target = base_id[bc.projection[i]];
    if (slot < 0)
      slot = target;
    else if (slot != target)
      ok = false;
  }
  if (ok) {
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  out.induced_isomorphism = ok;

  out.holds = out.kernel_is_double_cover && out.induced_isomorphism && cq.label == out.monodromy.quotient &&
              cq.order == out.monodromy.quotient_order && cq.abelian == !out.monodromy.non_abelian;

  std::ostringstream w;
  w << "rho(+-q) = " << out.irrep << "(g) on 2" << g.name() << " (order " << n2 << "); ker rho has order "
    << out.lifted_kernel.size()
    << (out.kernel_is_double_cover ? ", the double cover of ker " : ", not the double cover of ker ") << out.irrep
    << "; 2" << g.name() << "/ker rho = " << cq.label;
  if (cq.order == 2) w << " (rho is the sign irrep of the quotient)";
  out.witness = w.str();
  return out;
}

ConjectureResult conjecture_check(const SymmetryGroup& sg, const std::string& label) {
  if (sg.is_finite()) return conjecture_check(*sg.finite, sg.finite->irrep_index(label));
  const ContinuousGroup& c = *sg.continuous;
  ConjectureResult out;
  out.group = c.name();
  out.monodromy = monodromy_group(sg, label);
  out.irrep = out.monodromy.irrep;
  if (c.kind() == ContinuousGroup::Kind::Cinf) {
    // pi_1(S^2) is trivial.
    out.cover_quotient = "C1";
    out.holds = out.monodromy.quotient == "C1";
    out.witness = out.holds ? "rho = trivial irrep of pi_1 = C1"
                            : "monodromy group " + out.monodromy.quotient + " is not a quotient of pi_1 = C1";
  } else {
    // pi_1(RP^2) = C2.
    if (out.monodromy.quotient == "C1") {
      out.cover_quotient = "C1";
      out.holds = true;
      out.witness = "rho = a, trivial irrep of pi_1 = C2";
    } else if (out.monodromy.quotient == "C2") {
      out.cover_quotient = "C2";
      out.holds = true;
      out.witness = "rho = b, sign irrep of pi_1 = C2";
    } else {
      out.witness = "monodromy group " + out.monodromy.quotient + " is not a quotient of pi_1 = C2";
    }
  }
  out.kernel_is_double_cover = out.holds;
  out.induced_isomorphism = out.holds;
  return out;
}

}  // namespace molsym
