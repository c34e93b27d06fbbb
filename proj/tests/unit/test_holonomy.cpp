#include <gtest/gtest.h>

#include "molsym/holonomy.hpp"

using namespace molsym;

namespace {

std::vector<std::string> catalog() {
  std::vector<std::string> out = {"T", "O", "I"};
  for (int n = 1; n <= 8; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) out.push_back("D" + std::to_string(n));
  return out;
}

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST(Holonomy, AxisNames) {
  EXPECT_EQ(parse_axis('y'), 1);
  EXPECT_EQ(axis_name(2), 'z');
  EXPECT_THROW(parse_axis('w'), InvalidArgument);
}

TEST(Holonomy, ComponentExpressionsAgree) {
  for (const char* name : {"C4", "D3", "T", "O", "I"}) {
    const auto g = build_group(name);
    for (int r = 0; r < int(g->irreps().size()); ++r)
      for (int l : {1, 3, 6, 9})
        for (int a = 0; a < 3; ++a) EXPECT_LT(connection_component(*g, r, l, a).disagreement, 1e-10);
  }
}

TEST(Holonomy, CyclicOneDimensionalZComponentVanishes) {
  for (int n = 2; n <= 8; ++n) {
    const auto g = build_group("C" + std::to_string(n));
    for (int r = 0; r < int(g->irreps().size()); ++r) {
      if (g->irrep(r).dim != 1 || (r != 0 && g->irrep(r).label != "b")) continue;
      for (int l = 0; l <= 40; ++l) EXPECT_LT(max_abs(connection_component(*g, r, l, 2).value()), 1e-12);
    }
  }
}

TEST(Holonomy, SymmetryFlatIrrepsVanishPerL) {
  const std::vector<std::pair<std::string, std::string>> rows = {{"D3", "a1"}, {"D4", "b2"}, {"T", "1e"}, {"T", "2e"},
                                                                 {"O", "a2"},  {"O", "e"},   {"I", "t2"}};
  for (const auto& [gname, irrep] : rows) {
    const auto g = build_group(gname);
    const int r = g->irrep_index(irrep);
    EXPECT_TRUE(symmetry_flatness_proof(*g, r).flat_by_symmetry) << gname << " " << irrep;
    for (int l = 0; l <= 14; ++l)
      for (int a = 0; a < 3; ++a)
        EXPECT_LT(max_abs(connection_component(*g, r, l, a).value()), 1e-11) << gname << " " << irrep << " l=" << l;
  }
}

TEST(Holonomy, FiberTraceVanishesWithoutInvariantAxis) {
  // tr_mu A^{a,l} is a G-invariant vector; none exists for D_N, T, O, I
  for (const char* name : {"D4", "D5", "T", "O", "I"}) {
    const auto g = build_group(name);
    for (int r = 0; r < int(g->irreps().size()); ++r)
      for (int l = 1; l <= 8; ++l)
        for (int a = 0; a < 3; ++a)
          EXPECT_LT(std::abs(connection_component(*g, r, l, a).value().trace()), 1e-10) << name << " l=" << l;
  }
}

TEST(Holonomy, InvariantTensorsOfCubicAndIcosahedralComponents) {
  for (auto [name, irrep, l] : std::vector<std::tuple<std::string, std::string, int>>{
           {"O", "t1", 4}, {"O", "t2", 5}, {"I", "t1", 6}, {"I", "h", 7}}) {
    const auto g = build_group(name);
    const int r = g->irrep_index(irrep);
    std::array<CMatrix, 3> A;
    for (int a = 0; a < 3; ++a) A[a] = connection_component(*g, r, l, a).value();
    const cplx q = (A[0] * A[0]).trace();
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        EXPECT_LT(std::abs((A[a] * A[b]).trace() - (a == b ? q : cplx(0))), 1e-9 * (1 + std::abs(q))) << name;
    const cplx c = (A[0] * A[1] * A[2]).trace();
    auto eps = [](int a, int b, int k) { return (a - b) * (b - k) * (k - a) / 2; };
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int k = 0; k < 3; ++k)
          EXPECT_LT(std::abs((A[a] * A[b] * A[k]).trace() - double(eps(a, b, k)) * c), 1e-9 * (1 + std::abs(c)))
              << name << " " << a << b << k;
  }
}

TEST(Holonomy, RegularizationCutoff) {
  EXPECT_EQ(regularization_cutoff(0.05, 1e-12), 24);
  EXPECT_EQ(regularization_cutoff(0.5, 1e-12), 7);
  EXPECT_THROW(regularization_cutoff(1e-6, 1e-12), ComputationError);
}

TEST(Holonomy, TetrahedralTripletDecays) {
  const auto g = build_group("T");
  const auto rep = flatness_scan(*g, g->irrep_index("t"), {}, {0, 1, 2}, {0.5, 0.2, 0.1, 0.05});
  ASSERT_EQ(rep.max_abs.size(), 4u);
  for (int i = 0; i + 1 < 4; ++i) EXPECT_GT(rep.max_abs[i], rep.max_abs[i + 1]);
  EXPECT_LT(rep.max_abs.back(), 1e-6);
  EXPECT_TRUE(rep.decaying);
}

TEST(Holonomy, ScanRejectsBadGrids) {
  const auto g = build_group("T");
  EXPECT_THROW(flatness_scan(*g, 3, {}, {2}, {0.1, 0.2}), InvalidArgument);
  EXPECT_THROW(flatness_scan(*g, 3, {}, {2}, {0.1, -0.1}), InvalidArgument);
}

TEST(Holonomy, DecayVerdict) {
  EXPECT_TRUE(decay_verdict({1, 0.1, 1e-3, 1e-8}));
  EXPECT_FALSE(decay_verdict({1, 0.1, 0.2, 1e-8}));
  EXPECT_FALSE(decay_verdict({1, 0.1, 1e-3, 1e-5}));
  EXPECT_TRUE(decay_verdict({0, 0, 0, 0}));
}

TEST(Holonomy, FlatnessReasons) {
  auto reason = [](const std::string& g, const std::string& r) { return flatness_reason(parse_group(g), r); };
  EXPECT_EQ(reason("C5", "1e2"), FlatnessReason::Analytics);
  EXPECT_EQ(reason("C2", "b"), FlatnessReason::Analytics);
  EXPECT_EQ(reason("D6", "b1"), FlatnessReason::Symmetry);
  EXPECT_EQ(reason("D6", "e2"), FlatnessReason::Analytics);
  EXPECT_EQ(reason("T", "t"), FlatnessReason::Numerics);
  EXPECT_EQ(reason("O", "e"), FlatnessReason::Symmetry);
  EXPECT_EQ(reason("I", "t2"), FlatnessReason::Symmetry);
  EXPECT_EQ(reason("I", "g"), FlatnessReason::Numerics);
  EXPECT_EQ(reason("Dinf", "a2"), FlatnessReason::Symmetry);
  EXPECT_EQ(to_string(FlatnessReason::Numerics), "numerics");
}

TEST(Holonomy, AsymmetricConnectionIsTraceless) {
  auto path = [](double t) { return Rotation::from_euler(0.7 * t, 1.0 + 0.3 * std::sin(t), t * t); };
  std::vector<double> ts;
  for (int i = 0; i < 9; ++i) ts.push_back(0.3 * i);
  const auto tr = asymmetric_flatness_check(8, path, ts);
  for (double v : tr) EXPECT_LT(v, 1e-7);
  const auto flat = asymmetric_flatness_check(4, [](double) { return Rotation::from_euler(1, 2, 3); }, ts);
  for (double v : flat) EXPECT_EQ(v, 0.0);
  EXPECT_THROW(asymmetric_flatness_check(4, path, ts, 1.5), ComputationError);
  EXPECT_THROW(asymmetric_flatness_check(4, path, ts, 0), InvalidArgument);
}

TEST(Holonomy, MonodromyMatrixIsInverseElement) {
  const auto c3 = build_group("C3");
  const int e2 = c3->irrep_index("2e");
  const auto m = monodromy_matrix(*c3, e2, Rotation::about_z(kTwoPi / 3));
  EXPECT_LT(std::abs(m.to_complex()(0, 0) - std::polar(1.0, kTwoPi / 3)), 1e-14);
  EXPECT_THROW(monodromy_matrix(*c3, e2, Rotation::about_z(0.3)), InvalidArgument);
  EXPECT_THROW(monodromy_matrix(*c3, e2, 7), InvalidArgument);
}

TEST(Holonomy, MonodromyIdentityOnTruncatedStates) {
  const auto water = resolve_irrep(parse_group("C2"), "b");
  const auto ammonia = resolve_irrep(parse_group("C3"), "2e");
  const auto bf3 = resolve_irrep(parse_group("D3"), "e");
  for (const auto* r : {&water, &ammonia, &bf3})
    for (int e = 0; e < r->group.finite->order(); ++e) EXPECT_LT(monodromy_residual(*r, e, 20, 0.05), 1e-6);
}

TEST(Holonomy, MonodromyGroups) {
  auto mg = [](const std::string& g, const std::string& r) { return monodromy_group(parse_group(g), r); };
  EXPECT_EQ(mg("C6", "1e2").quotient, "C3");
  EXPECT_EQ(mg("D4", "b1").quotient, "C2");
  EXPECT_EQ(mg("D4", "b1").kernel_label, "D2");
  EXPECT_EQ(mg("D6", "e2").kernel_order, 2);
  EXPECT_EQ(mg("D6", "e2").quotient, "D3");
  EXPECT_TRUE(mg("D6", "e2").non_abelian);
  EXPECT_EQ(mg("T", "1e").quotient, "C3");
  EXPECT_EQ(mg("O", "e").quotient, "D3");
  EXPECT_EQ(mg("O", "a2").kernel_label, "T");
  EXPECT_EQ(mg("I", "h").quotient, "I");
  EXPECT_EQ(mg("I", "a").quotient, "C1");
  EXPECT_EQ(mg("Dinf", "a2").quotient, "C2");
  EXPECT_EQ(mg("Cinf", "2").quotient, "Cinf");
  EXPECT_EQ(mg("Cinf", "2").kernel_label, "C2");
}

TEST(Holonomy, ContinuousMonodromyPhases) {
  const ContinuousGroup cinf(ContinuousGroup::Kind::Cinf), dinf(ContinuousGroup::Kind::Dinf);
  EXPECT_LT(std::abs(continuous_monodromy(cinf, cinf.irrep("3"), Rotation::about_z(0.4)) - std::polar(1.0, -1.2)),
            1e-14);
  EXPECT_EQ(continuous_monodromy(dinf, dinf.irrep("a2"), Rotation::about_y(kPi)), cplx(-1));
  EXPECT_EQ(continuous_monodromy(dinf, dinf.irrep("a1"), Rotation::about_y(kPi)), cplx(1));
  EXPECT_THROW(continuous_monodromy(cinf, cinf.irrep("a"), Rotation::about_y(kPi)), InvalidArgument);
}

TEST(Holonomy, BinaryCoverIsAGroupOverG) {
  for (const char* name : {"C3", "D4", "T", "I"}) {
    const auto g = build_group(name);
    const auto c = binary_cover(*g);
    ASSERT_EQ(c.table.size, 2 * g->order());
    int order_two = 0;
    for (int a = 0; a < c.table.size; ++a) {
      order_two += c.table.orders[a] == 2;
      for (int b = 0; b < c.table.size; ++b)
        EXPECT_EQ(c.projection[c.table(a, b)], g->mul(c.projection[a], c.projection[b]));
    }
    EXPECT_EQ(order_two, 1) << name;  // only -1 squares to the identity
  }
}

class EveryGroup : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryGroup, ConjectureHolds) {
  const auto g = build_group(GetParam());
  for (int r = 0; r < int(g->irreps().size()); ++r) {
    const auto res = conjecture_check(*g, r);
    EXPECT_TRUE(res.holds) << res.witness;
    EXPECT_TRUE(res.kernel_is_double_cover);
    EXPECT_TRUE(res.induced_isomorphism);
    EXPECT_EQ(res.cover_quotient, res.monodromy.quotient);
    EXPECT_EQ(res.cover_order, 2 * g->order());
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, EveryGroup, ::testing::ValuesIn(catalog()));

TEST(Holonomy, ConjectureOnContinuousGroups) {
  EXPECT_TRUE(conjecture_check(parse_group("Dinf"), "a1").holds);
  EXPECT_TRUE(conjecture_check(parse_group("Dinf"), "a2").holds);
  EXPECT_FALSE(conjecture_check(parse_group("Dinf"), "e1").holds);
  EXPECT_TRUE(conjecture_check(parse_group("Cinf"), "a").holds);
  EXPECT_FALSE(conjecture_check(parse_group("Cinf"), "1").holds);
}
