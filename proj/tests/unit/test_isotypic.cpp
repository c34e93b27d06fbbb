#include <gtest/gtest.h>

#include "molsym/isotypic.hpp"
#include "molsym/wigner.hpp"
#include "oracles.hpp"

using namespace molsym;

namespace {

std::vector<std::string> catalog() {
  std::vector<std::string> out = {"T", "O", "I"};
  for (int n = 1; n <= 8; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) out.push_back("D" + std::to_string(n));
  return out;
}

class EveryGroup : public ::testing::TestWithParam<std::string> {};

CMatrix block_rep(const FiniteGroup& g, const AdaptedBasis& b, int e) {
  CMatrix R = CMatrix::Zero(b.V.cols(), b.V.cols());
  for (const auto& blk : b.blocks) {
    const CMatrix& G = g.irrep(blk.irrep).numeric[e];
    for (int mu = 0; mu < blk.dim; ++mu)
      for (int nu = 0; nu < blk.dim; ++nu)
        for (int k = 0; k < blk.mult; ++k)
          R(blk.offset + mu * blk.mult + k, blk.offset + nu * blk.mult + k) = G(mu, nu);
  }
  return R;
}

}  // namespace

TEST_P(EveryGroup, MultiplicitiesMatchCharacterAverage) {
  const auto g = build_group(GetParam());
  for (int l = 0; l <= 24; ++l)
    for (int r = 0; r < int(g->irreps().size()); ++r)
      EXPECT_NEAR(multiplicity(l, *g, r), oracle::multiplicity(*g, r, l), 1e-9)
          << "l=" << l << " " << g->irrep(r).label;
}

TEST_P(EveryGroup, DimensionSumRule) {
  const auto g = build_group(GetParam());
  for (int l = 0; l <= 40; ++l) {
    int sum = 0;
    for (int r = 0; r < int(g->irreps().size()); ++r) sum += g->irrep(r).dim * multiplicity(l, *g, r);
    EXPECT_EQ(sum, 2 * l + 1) << "l=" << l;
  }
}

TEST_P(EveryGroup, AdaptedBasisIntertwines) {
  const auto g = build_group(GetParam());
  for (int l : {0, 1, 3, 6, 11}) {
    const auto b = adapted_basis(l, *g);
    ASSERT_EQ(b->V.rows(), 2 * l + 1);
    ASSERT_EQ(b->V.cols(), 2 * l + 1);
    EXPECT_LT((b->V.adjoint() * b->V - CMatrix::Identity(2 * l + 1, 2 * l + 1)).cwiseAbs().maxCoeff(), 1e-10);
    for (int e = 0; e < g->order(); ++e) {
      const CMatrix lhs = wigner_D(l, g->element(e)).conjugate() * b->V;
      EXPECT_LT((lhs - b->V * block_rep(*g, *b, e)).cwiseAbs().maxCoeff(), 1e-9) << "l=" << l << " e=" << e;
    }
  }
}

TEST_P(EveryGroup, ExactWignerCharacter) {
  const auto g = build_group(GetParam());
  for (int e = 0; e < g->order(); ++e)
    for (int l : {0, 2, 5})
      EXPECT_NEAR(wigner_character_exact(*g, e, l).to_complex().real(),
                  oracle::weyl_character(l, oracle::matrix_angle(g->element(e))), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Catalog, EveryGroup, ::testing::ValuesIn(catalog()));

TEST(Isotypic, IcosahedralRowsObeyTheDimensionCount) {
  // l = 5 has 11 states: t1 + t2 + h
  const auto i = build_group("I");
  EXPECT_EQ(multiplicities(5, *i), (std::vector<int>{0, 1, 1, 0, 1}));
  EXPECT_EQ(multiplicities(6, *i), (std::vector<int>{1, 1, 0, 1, 1}));
  EXPECT_EQ(multiplicities(10, *i), (std::vector<int>{1, 1, 1, 1, 2}));
}

TEST(Isotypic, TrivialMultiplicityOfHighSymmetry) {
  // first invariants: O at l = 0, 4, 6, 8; I at l = 0, 6, 10
  const auto o = build_group("O"), i = build_group("I");
  std::vector<int> lo, li;
  for (int l = 0; l <= 12; ++l) {
    if (multiplicity(l, *o, 0)) lo.push_back(l);
    if (multiplicity(l, *i, 0)) li.push_back(l);
  }
  EXPECT_EQ(lo, (std::vector<int>{0, 4, 6, 8, 9, 10, 12}));
  EXPECT_EQ(li, (std::vector<int>{0, 6, 10, 12}));
}

TEST(Isotypic, ContinuousClosedForms) {
  const auto cinf = parse_group("Cinf"), dinf = parse_group("Dinf");
  for (int l = 0; l <= 6; ++l) {
    EXPECT_EQ(multiplicity(l, cinf, "a"), 1);
    EXPECT_EQ(multiplicity(l, cinf, "3"), l >= 3);
    EXPECT_EQ(multiplicity(l, cinf, "-2"), l >= 2);
    EXPECT_EQ(multiplicity(l, dinf, "a1"), l % 2 == 0);
    EXPECT_EQ(multiplicity(l, dinf, "a2"), l % 2 == 1);
    EXPECT_EQ(multiplicity(l, dinf, "e2"), l >= 2);
  }
  EXPECT_THROW(multiplicity(1, dinf, "b"), InvalidArgument);
}

TEST(Isotypic, RotationalStateIndexSet) {
  const auto d3 = build_group("D3");
  const int e = d3->irrep_index("e");
  const auto states = rotational_states(*d3, e, 4);
  std::size_t want = 0;
  for (int l = 0; l <= 4; ++l) want += std::size_t(2 * l + 1) * multiplicity(l, *d3, e);
  EXPECT_EQ(states.size(), want);
}

TEST(Isotypic, CyclicBasisIsNative) {
  const auto c3 = build_group("C3");
  const auto b = adapted_basis(2, *c3);
  for (int c = 0; c < 5; ++c) EXPECT_NEAR(b->V.col(c).cwiseAbs().maxCoeff(), 1.0, 1e-14);
}

TEST(Isotypic, RejectsNegativeL) { EXPECT_THROW(multiplicities(-1, *build_group("T")), InvalidArgument); }
