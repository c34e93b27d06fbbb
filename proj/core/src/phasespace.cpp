#include "molsym/phasespace.hpp"

#include <algorithm>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>

#include "molsym/wigner.hpp"

namespace molsym {

namespace {

double norm_factor(const IrrepRef& r, int l) {
  return std::sqrt((2.0 * l + 1) / r.dim / (8 * kPi * kPi / group_volume(r.group)));
}

double damping(int l, double delta) { return std::exp(-delta * l * (l + 1) / 2); }

// Sign-normalized quaternion, for deterministic tie-breaks.
std::array<double, 4> canonical_quaternion(const Rotation& r) {
  auto q = r.quaternion();
  for (double c : q) {
    if (std::abs(c) < 1e-15) continue;
    if (c < 0)
      for (double& x : q) x = -x;
    break;
  }
  return q;
}

std::vector<MomentumIndex> index_set(const IrrepRef& r, int lmax) {
  std::vector<MomentumIndex> out;
  for (int l = 0; l <= lmax; ++l) {
    const int M = irrep_multiplicity(r, l);
    for (int m = -l; m <= l; ++m)
      for (int k = 0; k < M; ++k) out.push_back({l, m, k});
  }
  return out;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  const auto pos = boost::math::legendre_p_zeros<double>(n);
  std::vector<double> x, w;
  for (double z : pos) {
    const double dp = boost::math::legendre_p_prime(n, z);
    const double wt = 2 / ((1 - z * z) * dp * dp);
    x.push_back(z);
    w.push_back(wt);
    if (z != 0) {
      x.push_back(-z);
      w.push_back(wt);
    }
  }
  return {x, w};
}

}  // namespace

IrrepRef resolve_irrep(const SymmetryGroup& g, const std::string& label) {
  IrrepRef r;
  r.group = g;
  if (g.is_finite()) {
    r.index = g.finite->irrep_index(label);
    r.label = g.finite->irrep(r.index).label;
    r.dim = g.finite->irrep(r.index).dim;
  } else {
    r.continuous = g.continuous->irrep(label);
    r.label = r.continuous->label;
    r.dim = r.continuous->dim;
  }
  return r;
}

double group_volume(const SymmetryGroup& g) { return g.is_finite() ? g.finite->order() : g.continuous->volume(); }

int irrep_multiplicity(const IrrepRef& r, int l) {
  check_ell(l);
  return r.group.is_finite() ? multiplicity(l, *r.group.finite, r.index)
                             : r.group.continuous->multiplicity(l, *r.continuous);
}

CosetPoint canonicalize(const Rotation& r, const SymmetryGroup& g, CosetChart chart) {
  CosetPoint p;
  p.r = r;
  if (!g.is_finite()) {
    const EulerAngles e = r.euler();
    p.s = Rotation::from_euler(e.alpha, e.beta, 0);
    if (g.continuous->kind() == ContinuousGroup::Kind::Dinf && e.beta > kPi / 2) {
      const EulerAngles f = (p.s * Rotation::about_y(kPi)).euler();
      p.s = Rotation::from_euler(f.alpha, f.beta, 0);
    }
    p.g = p.s.inverse() * r;
    return p;
  }
  const FiniteGroup& G = *g.finite;
  if (chart == CosetChart::EulerGamma) {
    if (G.kind() != GroupKind::Cyclic) throw InvalidArgument("the Euler-gamma chart needs a cyclic group");
    const EulerAngles e = r.euler();
    const double step = kTwoPi / G.param();
    double gamma = std::fmod(e.gamma, kTwoPi);
    if (gamma < 0) gamma += kTwoPi;
    int k = int(std::floor(gamma / step + 1e-12)) % G.param();
    gamma -= k * step;
    if (gamma < 0) gamma = 0;
    p.s = Rotation::from_euler(e.alpha, e.beta, gamma);
    p.element = G.find(Rotation::about_z(k * step));
    p.g = G.element(p.element);
    return p;
  }
  int best = -1;
  double best_angle = 0;
  std::array<double, 4> best_q{};
  for (int h = 0; h < G.order(); ++h) {
    const Rotation c = r * G.element(h);
    const double a = c.angle();
    const auto q = canonical_quaternion(c);
    if (best < 0 || a < best_angle - 1e-12 || (std::abs(a - best_angle) <= 1e-12 && q > best_q)) {
      best = h;
      best_angle = a;
      best_q = q;
    }
  }
  p.s = r * G.element(best);
  p.element = G.inverse(best);
  p.g = G.element(p.element);
  return p;
}

CMatrix adapted_matrix_elements(const IrrepRef& r, int l, const Rotation& s) {
  const CMatrix D = wigner_D(l, s);
  if (r.group.is_finite()) {
    const auto basis = adapted_basis(l, *r.group.finite);
    const AdaptedBlock* b = basis->block(r.index);
    if (!b) return CMatrix(2 * l + 1, 0);
    return D * basis->V.middleCols(b->offset, b->dim * b->mult).conjugate();
  }
  if (r.dim != 1) throw InvalidArgument("position states of two-dimensional Dinf irreps are not supported");
  if (!irrep_multiplicity(r, l)) return CMatrix(2 * l + 1, 0);
  return D.col(r.continuous->lambda + l);
}

cplx harmonic(const IrrepRef& r, int l, int m, int kappa, const Rotation& s, int mu) {
  const int M = irrep_multiplicity(r, l);
  if (M == 0) throw InvalidArgument("l=" + std::to_string(l) + " does not contain irrep " + r.label);
  if (std::abs(m) > l || kappa < 0 || kappa >= M || mu < 0 || mu >= r.dim)
    throw InvalidArgument("harmonic index out of range");
  return norm_factor(r, l) * adapted_matrix_elements(r, l, s)(m + l, mu * M + kappa);
}

PositionState position_state(const IrrepRef& r, const Rotation& s, int mu, int lmax, double delta) {
  if (mu < 0 || mu >= r.dim) throw InvalidArgument("fiber index out of range");
  if (delta < 0) throw InvalidArgument("damping must be nonnegative");
  PositionState p;
  p.irrep = r;
  p.s = s;
  p.mu = mu;
  p.lmax = lmax;
  p.delta = delta;
  p.index = index_set(r, lmax);
  p.coeffs.resize(Eigen::Index(p.index.size()));
  Eigen::Index pos = 0;
  for (int l = 0; l <= lmax; ++l) {
    const int M = irrep_multiplicity(r, l);
    if (!M) continue;
    const CMatrix A = adapted_matrix_elements(r, l, s);
    const double f = norm_factor(r, l) * damping(l, delta);
    for (int m = -l; m <= l; ++m)
      for (int k = 0; k < M; ++k) p.coeffs[pos++] = f * A(m + l, mu * M + k);
  }
  return p;
}

PositionState rotate_lab(const PositionState& state, const Rotation& g) {
  PositionState out = state;
  Eigen::Index pos = 0;
  for (int l = 0; l <= state.lmax; ++l) {
    const int M = irrep_multiplicity(state.irrep, l);
    if (!M) continue;
    const int n = 2 * l + 1;
    // block is row-major over (m, kappa)
    Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> in(state.coeffs.data() + pos,
                                                                                              n, M);
    Eigen::Map<Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> res(out.coeffs.data() + pos, n, M);
    res = wigner_D(l, g) * in;
    pos += n * M;
  }
  return out;
}

cplx gram_overlap(const PositionState& a, const PositionState& b) {
  if (a.irrep.group.name() != b.irrep.group.name() || a.irrep.label != b.irrep.label || a.lmax != b.lmax)
    throw InvalidArgument("overlap needs states of the same species and truncation");
  return a.coeffs.dot(b.coeffs);
}

int full_index(int l, int m, int omega) { return l * (4 * l * l - 1) / 3 + (m + l) * (2 * l + 1) + (omega + l); }

int full_size(int lmax) { return full_index(lmax + 1, -(lmax + 1), -(lmax + 1)); }

CVector asymmetric_position(const Rotation& r, int lmax, double delta) {
  CVector v = CVector::Zero(full_size(lmax));
  for (int l = 0; l <= lmax; ++l) {
    const CMatrix D = wigner_D(l, r) * (std::sqrt((2.0 * l + 1) / (8 * kPi * kPi)) * damping(l, delta));
    for (int m = -l; m <= l; ++m)
      for (int w = -l; w <= l; ++w) v[full_index(l, m, w)] = D(m + l, w + l);
  }
  return v;
}

CVector zak_state(const FiniteGroup& g, int irrep, const Rotation& s, int mu, int nu, int lmax, double delta) {
  const int d = g.irrep(irrep).dim;
  if (mu < 0 || mu >= d || nu < 0 || nu >= d) throw InvalidArgument("Zak label out of range");
  CVector v = CVector::Zero(full_size(lmax));
  const double fiber = std::sqrt(double(g.order()) / d);
  for (int l = 0; l <= lmax; ++l) {
    const auto basis = adapted_basis(l, g);
    const AdaptedBlock* b = basis->block(irrep);
    if (!b) continue;
    const double f = std::sqrt((2.0 * l + 1) / (8 * kPi * kPi)) * fiber * damping(l, delta);
    const CMatrix A = wigner_D(l, s) * basis->V.middleCols(b->offset + mu * b->mult, b->mult).conjugate();
    const CMatrix kets = basis->V.middleCols(b->offset + nu * b->mult, b->mult);
    // |l_{m kappa}, nu> = sum_omega V_{omega, (nu kappa)} |l m omega>
    const CMatrix block = f * A * kets.transpose();
    for (int m = -l; m <= l; ++m)
      for (int w = -l; w <= l; ++w) v[full_index(l, m, w)] = block(m + l, w + l);
  }
  return v;
}

CVector zak_state_from_cosets(const FiniteGroup& g, int irrep, const Rotation& s, int mu, int nu, int lmax,
                              double delta) {
  const Irrep& r = g.irrep(irrep);
  CVector v = CVector::Zero(full_size(lmax));
  for (int e = 0; e < g.order(); ++e) v += r.numeric[e](mu, nu) * asymmetric_position(s * g.element(e), lmax, delta);
  return v * std::sqrt(double(r.dim) / g.order());
}

FourierReport fourier_roundtrip(const IrrepRef& r, int lmax, int q) {
  if (q < lmax) throw InvalidArgument("quadrature order must be at least lmax for an exact Gram matrix");
  const auto index = index_set(r, lmax);
  const Eigen::Index n = Eigen::Index(index.size());
  const int na = 2 * q + 1;
  const bool finite = r.group.is_finite();
  const int ng = finite ? na : 1;  // harmonics of continuous groups do not depend on gamma
  const auto [xs, ws] = gauss_legendre(q + 1);

  // columns: quadrature point x fiber index, scaled by sqrt(weight)
  const Eigen::Index cols = Eigen::Index(xs.size()) * na * ng * r.dim;
  CMatrix h(n, cols);
  Eigen::Index col = 0;
  for (std::size_t ib = 0; ib < xs.size(); ++ib) {
    const double beta = std::acos(xs[ib]);
    const double w = std::sqrt(ws[ib] * (kTwoPi / na) * (kTwoPi / ng));
    for (int ia = 0; ia < na; ++ia)
      for (int ig = 0; ig < ng; ++ig, col += r.dim) {
        const Rotation rot = Rotation::from_euler(kTwoPi * ia / na, beta, kTwoPi * ig / ng);
        Eigen::Index pos = 0;
        for (int l = 0; l <= lmax; ++l) {
          const int M = irrep_multiplicity(r, l);
          if (!M) continue;
          const CMatrix A = adapted_matrix_elements(r, l, rot) * (w * norm_factor(r, l));
          for (int m = -l; m <= l; ++m)
            for (int k = 0; k < M; ++k, ++pos)
              for (int mu = 0; mu < r.dim; ++mu) h(pos, col + mu) = A(m + l, mu * M + k);
        }
      }
  }
  CMatrix gram = h.conjugate() * h.transpose();
  gram /= group_volume(r.group);
  FourierReport rep;
  rep.states = int(n);
  rep.quadrature_points = int(xs.size()) * na * ng;
  rep.residual = n ? (gram - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() : 0.0;
  return rep;
}

}  // namespace molsym
