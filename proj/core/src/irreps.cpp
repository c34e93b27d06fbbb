#include <algorithm>
#include <numeric>

#include "internal.hpp"

namespace molsym::detail {

namespace {

Irrep make_irrep(const FiniteGroup& g, std::string label, std::vector<std::string> aliases,
                 std::vector<ExactMatrix> mats) {
  Irrep r;
  r.label = std::move(label);
  r.aliases = std::move(aliases);
  r.dim = mats.front().dim();
  const int n = g.cyclotomic_order();
  r.matrices.reserve(mats.size());
  for (auto& m : mats) r.matrices.push_back(m.lifted(n));
  for (const auto& m : r.matrices) r.numeric.push_back(m.to_complex());
  for (const auto& cls : g.classes()) r.characters.push_back(r.matrices[cls.front()].trace());
  return r;
}

ExactMatrix scalar(const Cyclotomic& v) {
  ExactMatrix m(1);
  m(0, 0) = v;
  return m;
}

Irrep one_dim(const FiniteGroup& g, std::string label, std::vector<std::string> aliases,
              const std::function<Cyclotomic(int)>& value) {
  std::vector<ExactMatrix> mats;
  for (int a = 0; a < g.order(); ++a) mats.push_back(scalar(value(a)));
  return make_irrep(g, std::move(label), std::move(aliases), std::move(mats));
}

// Complement of the trivial irrep inside a permutation representation on m
// points, in the discrete Fourier basis v_j = sum_x zeta_m^(j x) e_x / sqrt(m):
//   Gamma_ij(g) = (1/m) sum_x zeta_m^(j x - i perm_g(x)),  i, j = 1..m-1.
std::vector<ExactMatrix> fourier_block(const std::vector<std::vector<int>>& perms, int m) {
  std::vector<ExactMatrix> out;
  for (const auto& p : perms) {
    ExactMatrix mat(m - 1);
    for (int i = 1; i < m; ++i)
      for (int j = 1; j < m; ++j) {
        Cyclotomic s;
        for (int x = 0; x < m; ++x) s += Cyclotomic::root(m, j * x - i * p[x]);
        mat(i - 1, j - 1) = s * Rational(1, m);
      }
    out.push_back(std::move(mat));
  }
  return out;
}

std::vector<std::vector<int>> permutations_on(const FiniteGroup& g, const std::vector<Eigen::Vector3d>& pts,
                                              bool lines) {
  std::vector<std::vector<int>> out;
  for (const auto& r : g.elements()) out.push_back(induced_permutation(r, pts, lines));
  return out;
}

const std::vector<Eigen::Vector3d> kAxes = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

std::vector<Irrep> cyclic(const FiniteGroup& g) {
  const int N = g.param();
  std::vector<Irrep> out;
  auto add = [&](std::string label, std::vector<std::string> aliases, int charge) {
    Irrep r = one_dim(g, std::move(label), std::move(aliases),
                      [&](int k) { return Cyclotomic::root(N, (long long)charge * k); });
    r.charge = charge;
    out.push_back(std::move(r));
  };
  add("a", {}, 0);
  if (N % 2 == 0) add("b", {}, N / 2);
  const int top = (N - 1) / 2;
  for (int i = 1; i <= top; ++i) {
    const std::string s = std::to_string(i);
    if (top == 1) {
      add("1e", {"1e1"}, i);
      add("2e", {"2e1"}, N - i);
    } else {
      add("1e" + s, {}, i);
      add("2e" + s, {}, N - i);
    }
  }
  return out;
}

std::vector<Irrep> dihedral(const FiniteGroup& g) {
  const int N = g.param();
  std::vector<Irrep> out;
  // elements: k -> Rz(2 pi k / N); N + k -> Rz(2 pi k / N) Ry(pi)
  auto flip = [N](int a) { return a >= N; };
  auto step = [N](int a) { return a % N; };
  auto sgn = [](bool neg) { return Cyclotomic(neg ? -1 : 1); };
  if (N == 2) {
    // 0: e, 1: C2z, 2: C2y, 3: C2x
    out.push_back(one_dim(g, "a", {"a1"}, [](int) { return Cyclotomic(1); }));
    out.push_back(one_dim(g, "b1", {}, [&](int a) { return sgn(a == 2 || a == 3); }));
    out.push_back(one_dim(g, "b2", {}, [&](int a) { return sgn(a == 1 || a == 3); }));
    out.push_back(one_dim(g, "b3", {}, [&](int a) { return sgn(a == 1 || a == 2); }));
    return out;
  }
  out.push_back(one_dim(g, "a1", {"a"}, [](int) { return Cyclotomic(1); }));
  out.push_back(one_dim(g, "a2", {}, [&](int a) { return sgn(flip(a)); }));
  if (N % 2 == 0) {
    out.push_back(one_dim(g, "b1", {}, [&](int a) { return sgn(step(a) % 2 == 1); }));
    out.push_back(one_dim(g, "b2", {}, [&](int a) { return sgn((step(a) % 2 == 1) != flip(a)); }));
  }
  const int top = (N - 1) / 2;
  for (int i = 1; i <= top; ++i) {
    std::vector<ExactMatrix> mats;
    for (int a = 0; a < g.order(); ++a) {
      ExactMatrix m(2);
      const Cyclotomic lo = Cyclotomic::root(N, -(long long)i * step(a));
      const Cyclotomic hi = Cyclotomic::root(N, (long long)i * step(a));
      if (flip(a)) {
        m(0, 1) = lo;
        m(1, 0) = hi;
      } else {
        m(0, 0) = lo;
        m(1, 1) = hi;
      }
      mats.push_back(std::move(m));
    }
    if (top == 1)
      out.push_back(make_irrep(g, "e", {"e1"}, std::move(mats)));
    else
      out.push_back(make_irrep(g, "e" + std::to_string(i), {}, std::move(mats)));
  }
  return out;
}

std::vector<Irrep> tetrahedral(const FiniteGroup& g) {
  std::vector<Irrep> out;
  const auto perms = permutations_on(g, kAxes, true);
  // T permutes the coordinate axes cyclically; the shift taking x to perm[0]
  // defines the quotient T -> C3 with x -> y -> z as the generator.
  out.push_back(one_dim(g, "a", {}, [](int) { return Cyclotomic(1); }));
  out.push_back(one_dim(g, "1e", {}, [&](int a) { return Cyclotomic::root(3, perms[a][0]); }));
  out.push_back(one_dim(g, "2e", {}, [&](int a) { return Cyclotomic::root(3, -perms[a][0]); }));
  std::vector<ExactMatrix> rot;
  for (int a = 0; a < g.order(); ++a) rot.push_back(g.exact_rotation(a));
  out.push_back(make_irrep(g, "t", {"ti", "t1"}, std::move(rot)));
  return out;
}

std::vector<Irrep> octahedral(const FiniteGroup& g) {
  std::vector<Irrep> out;
  const std::vector<Eigen::Vector3d> diagonals = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  const auto diag_perms = permutations_on(g, diagonals, true);
  const auto axis_perms = permutations_on(g, kAxes, true);
  auto sign = [&](int a) { return Cyclotomic(permutation_sign(diag_perms[a])); };
  out.push_back(one_dim(g, "a1", {"a"}, [](int) { return Cyclotomic(1); }));
  out.push_back(one_dim(g, "a2", {}, sign));
  out.push_back(make_irrep(g, "e", {}, fourier_block(axis_perms, 3)));
  std::vector<ExactMatrix> t1, t2;
  for (int a = 0; a < g.order(); ++a) {
    t1.push_back(g.exact_rotation(a));
    t2.push_back(g.exact_rotation(a) * sign(a));
  }
  out.push_back(make_irrep(g, "t1", {}, std::move(t1)));
  out.push_back(make_irrep(g, "t2", {}, std::move(t2)));
  return out;
}

std::vector<Irrep> icosahedral(const FiniteGroup& g) {
  std::vector<Irrep> out;
  const int n = g.cyclotomic_order();

  // Five frames of mutually orthogonal 2-fold axes.
  std::vector<Eigen::Vector3d> c2, c5;
  auto add_line = [](std::vector<Eigen::Vector3d>& v, const Eigen::Vector3d& a) {
    for (const auto& b : v)
      if ((a - b).norm() < 1e-9 || (a + b).norm() < 1e-9) return;
    v.push_back(a);
  };
  for (int a = 0; a < g.order(); ++a) {
    if (g.element_order(a) == 2) add_line(c2, g.element(a).axis());
    if (g.element_order(a) == 5) add_line(c5, g.element(a).axis());
  }
  std::vector<std::array<int, 3>> frames;
  const int m2 = int(c2.size());
  for (int i = 0; i < m2; ++i)
    for (int j = i + 1; j < m2; ++j)
      for (int k = j + 1; k < m2; ++k)
        if (std::abs(c2[i].dot(c2[j])) < 1e-9 && std::abs(c2[i].dot(c2[k])) < 1e-9 && std::abs(c2[j].dot(c2[k])) < 1e-9)
          frames.push_back({i, j, k});
  if (c2.size() != 15 || frames.size() != 5 || c5.size() != 6) throw ComputationError("icosahedral axis census failed");
  std::vector<int> frame_of(c2.size(), -1);
  for (int f = 0; f < 5; ++f)
    for (int i : frames[f]) frame_of[i] = f;

  const auto axis_perms = permutations_on(g, c2, true);
  std::vector<std::vector<int>> frame_perms;
  for (const auto& p : axis_perms) {
    std::vector<int> fp(5);
    for (int f = 0; f < 5; ++f) {
      fp[f] = frame_of[p[frames[f][0]]];
      for (int i : frames[f])
        if (frame_of[p[i]] != fp[f]) throw ComputationError("rotation splits an orthogonal frame");
    }
    frame_perms.push_back(std::move(fp));
  }
  const auto five_perms = permutations_on(g, c5, true);

  // zeta -> zeta^a with a = 2 mod 5 and a = 1 mod n/5 swaps sqrt 5 -> -sqrt 5 only.
  long long galois = 1;
  while (galois % 5 != 2 || galois % (n / 5) != 1) ++galois;

  out.push_back(one_dim(g, "a", {}, [](int) { return Cyclotomic(1); }));
  std::vector<ExactMatrix> t1, t2;
  for (int a = 0; a < g.order(); ++a) {
    t1.push_back(g.exact_rotation(a));
    t2.push_back(g.exact_rotation(a).galois(galois));
  }
  out.push_back(make_irrep(g, "t1", {}, std::move(t1)));
  out.push_back(make_irrep(g, "t2", {}, std::move(t2)));
  out.push_back(make_irrep(g, "g", {}, fourier_block(frame_perms, 5)));
  out.push_back(make_irrep(g, "h", {}, fourier_block(five_perms, 6)));
  return out;
}

}  // namespace

std::vector<Irrep> build_irreps(const FiniteGroup& g) {
  switch (g.kind()) {
    case GroupKind::Cyclic:
      return cyclic(g);
    case GroupKind::Dihedral:
      return dihedral(g);
    case GroupKind::Tetrahedral:
      return tetrahedral(g);
    case GroupKind::Octahedral:
      return octahedral(g);
    case GroupKind::Icosahedral:
      return icosahedral(g);
  }
  return {};
}

}  // namespace molsym::detail
