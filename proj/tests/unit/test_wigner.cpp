#include <gtest/gtest.h>

#include <random>

#include "molsym/wigner.hpp"
#include "oracles.hpp"

using namespace molsym;

namespace {

std::vector<Rotation> samples(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0, kTwoPi), c(-1, 1);
  std::vector<Rotation> out;
  for (int i = 0; i < n; ++i) out.push_back(Rotation::from_euler(u(rng), std::acos(c(rng)), u(rng)));
  return out;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Wigner, SpinOneIsTheRotationMatrixInSphericalBasis) {
  // e_{+1} = -(x + iy)/sqrt2, e_0 = z, e_{-1} = (x - iy)/sqrt2; rows of U are conj(e_m), m = -1, 0, 1
  CMatrix U(3, 3);
  const double s = 1 / std::sqrt(2.0);
  U << cplx(s, 0), cplx(0, s), 0, 0, 0, 1, cplx(-s, 0), cplx(0, s), 0;
  for (const auto& r : samples(10, 1)) {
    const CMatrix want = U * r.matrix().cast<cplx>() * U.adjoint();
    EXPECT_LT(max_abs(wigner_D(1, r) - want), 1e-13);
  }
}

TEST(Wigner, Homomorphism) {
  const auto rs = samples(12, 2);
  for (int l : {0, 1, 2, 5, 12, 30})
    for (std::size_t i = 0; i + 1 < rs.size(); i += 2)
      EXPECT_LT(max_abs(wigner_D(l, rs[i] * rs[i + 1]) - wigner_D(l, rs[i]) * wigner_D(l, rs[i + 1])), 1e-10)
          << "l=" << l;
}

TEST(Wigner, Unitary) {
  for (int l : {1, 4, 20, 60})
    for (const auto& r : samples(4, 3)) {
      const CMatrix D = wigner_D(l, r);
      EXPECT_LT(max_abs(D * D.adjoint() - CMatrix::Identity(2 * l + 1, 2 * l + 1)), 1e-10) << "l=" << l;
    }
}

TEST(Wigner, ZRotationIsDiagonalPhase) {
  const CMatrix D = wigner_D(3, Rotation::about_z(0.7));
  for (int m = -3; m <= 3; ++m) EXPECT_LT(std::abs(D(m + 3, m + 3) - std::exp(cplx(0, -m * 0.7))), 1e-14);
}

TEST(Wigner, SmallDMethodsAgree) {
  for (int l = 0; l <= 10; ++l)
    for (double b : {0.0, 0.3, 1.2, kPi / 2, 2.9, kPi}) {
      const auto e = wigner_small_d(l, b);
      EXPECT_LT((e - wigner_small_d_exact(l, b)).cwiseAbs().maxCoeff(), 1e-12) << l << " " << b;
      EXPECT_LT((e - wigner_small_d_series(l, b)).cwiseAbs().maxCoeff(), 1e-11) << l << " " << b;
    }
}

TEST(Wigner, SmallDClosedForms) {
  const double b = 0.83;
  const auto d1 = wigner_small_d(1, b);
  EXPECT_NEAR(d1(2, 2), (1 + std::cos(b)) / 2, 1e-15);
  EXPECT_NEAR(d1(2, 1), -std::sin(b) / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(d1(1, 1), std::cos(b), 1e-15);
  const auto d2 = wigner_small_d(2, b);
  EXPECT_NEAR(d2(2, 2), (3 * std::cos(b) * std::cos(b) - 1) / 2, 1e-14);
}

TEST(Wigner, LargeLStaysOrthogonal) {
  const auto d = wigner_small_d(128, 1.0);
  EXPECT_LT((d * d.transpose() - Eigen::MatrixXd::Identity(257, 257)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Wigner, GeneratorAlgebra) {
  for (int l : {1, 2, 7}) {
    const auto L = generators(l);
    EXPECT_LT(max_abs(L.Lx * L.Ly - L.Ly * L.Lx - cplx(0, 1) * L.Lz), 1e-12);
    EXPECT_LT(max_abs(L.Ly * L.Lz - L.Lz * L.Ly - cplx(0, 1) * L.Lx), 1e-12);
    EXPECT_LT(max_abs(L.Lz * L.Lx - L.Lx * L.Lz - cplx(0, 1) * L.Ly), 1e-12);
    for (int a = 0; a < 3; ++a) {
      EXPECT_EQ(L[a].trace(), cplx(0));
      EXPECT_LT(max_abs(L[a] - L[a].adjoint()), 1e-15);
    }
    const CMatrix casimir = L.Lx * L.Lx + L.Ly * L.Ly + L.Lz * L.Lz;
    EXPECT_LT(max_abs(casimir - double(l * (l + 1)) * CMatrix::Identity(2 * l + 1, 2 * l + 1)), 1e-12);
  }
}

TEST(Wigner, GeneratorsExponentiate) {
  const auto L = generators(3);
  const double t = 0.37;
  const CMatrix A = cplx(0, -t) * L.Ly;
  EXPECT_LT(max_abs(A.exp() - wigner_D(3, Rotation::about_y(t))), 1e-12);
}

TEST(Wigner, CharacterMatchesTrace) {
  for (const auto& r : samples(6, 5))
    for (int l : {0, 1, 3, 8}) {
      EXPECT_NEAR(wigner_D(l, r).trace().real(), oracle::weyl_character(l, oracle::matrix_angle(r)), 1e-10);
      EXPECT_NEAR(wigner_character(l, r.angle()), oracle::weyl_character(l, r.angle()), 1e-12);
    }
}

TEST(Wigner, RejectsBadL) {
  EXPECT_THROW(wigner_D(-1, Rotation::identity()), InvalidArgument);
  EXPECT_THROW(wigner_D(ell_cap() + 1, Rotation::identity()), InvalidArgument);
}
