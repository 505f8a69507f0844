#include "flagcohom/io.hpp"
#include "flagcohom/parabolic.hpp"

#include <gtest/gtest.h>

using namespace flagcohom;

namespace {

ParabolicData make(Family f, int rank, int node) { return build_parabolic(build_root_system({f, rank}), node); }

} // namespace

TEST(Parabolic, CanonicalDegreeOfProjectiveSpace)
{
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(make(Family::A, n, 1).d0(), n + 1) << "A" << n;
}

TEST(Parabolic, Examples)
{
  auto a3 = make(Family::A, 3, 2);
  EXPECT_EQ(a3.dim_x(), 4);
  EXPECT_EQ(a3.c(), 1);
  EXPECT_EQ(a3.d0(), 4);
  EXPECT_EQ(a3.mu(), 3);
  EXPECT_EQ(make(Family::B, 3, 1).c(), 2);

  auto a2 = torelli_constants(make(Family::A, 2, 1));
  EXPECT_EQ(a2.n, 2);
  EXPECT_EQ(a2.c, 1);
  EXPECT_EQ(a2.d0, 3);
  EXPECT_EQ(a2.mu, 2);

  auto a1 = torelli_constants(make(Family::A, 1, 1));
  EXPECT_EQ(a1.n, 1);
  EXPECT_EQ(a1.c, 1);
  EXPECT_EQ(a1.d0, 2);
  EXPECT_EQ(a1.mu, 1);
}

TEST(Parabolic, KnownVarieties)
{
  // odd quadric Q^{2l-1} = B_l / P_1 has index 2l-1; Lagrangian Grassmannian C_l / P_l has index l+1
  for (int l = 2; l <= 6; ++l) {
    auto q = make(Family::B, l, 1);
    EXPECT_EQ(q.dim_x(), 2 * l - 1);
    EXPECT_EQ(q.d0(), 2 * l - 1);
    auto lg = make(Family::C, l, l);
    EXPECT_EQ(lg.dim_x(), l * (l + 1) / 2);
    EXPECT_EQ(lg.d0(), l + 1);
    // C_l / P_1 is projective (2l-1)-space
    auto p = make(Family::C, l, 1);
    EXPECT_EQ(p.dim_x(), 2 * l - 1);
    EXPECT_EQ(p.d0(), 2 * l);
  }
  // Cayley plane E6/P1: dimension 16, index 12; E7/P7: dimension 27, index 18
  EXPECT_EQ(make(Family::E, 6, 1).dim_x(), 16);
  EXPECT_EQ(make(Family::E, 6, 1).d0(), 12);
  EXPECT_EQ(make(Family::E, 7, 7).dim_x(), 27);
  EXPECT_EQ(make(Family::E, 7, 7).d0(), 18);
}

TEST(Parabolic, InvariantsEveryNode)
{
  for (auto t : all_types(8)) {
    auto rs = build_root_system(t);
    for (int node = 1; node <= rs->rank(); ++node) {
      auto pd = build_parabolic(rs, node);
      EXPECT_EQ(pd.compact_roots().size() + pd.noncompact_roots().size(), rs->positive_roots().size());
      EXPECT_TRUE(pd.c() == 1 || pd.c() == 2 || pd.c() == 3);
      EXPECT_GE(pd.mu(), 1);
      EXPECT_GE(pd.d0(), 1);
      const Vec& lambda = rs->fundamental_weight(node);
      for (int idx : pd.compact_indices())
        EXPECT_EQ(rs->inner(lambda, rs->positive_roots()[static_cast<std::size_t>(idx)]), 0);
      for (int idx : pd.noncompact_indices()) {
        const int a = rs->positive_root_coords()[static_cast<std::size_t>(idx)][static_cast<std::size_t>(node - 1)];
        EXPECT_GT(a, 0);
        EXPECT_EQ(rs->inner(lambda, rs->positive_roots()[static_cast<std::size_t>(idx)]), Rational(pd.c() * a));
      }
      Vec sum(rs->ambient_dim(), Rational(0));
      for (const auto& a : pd.noncompact_roots()) sum = sum + a;
      EXPECT_EQ(sum, Rational(pd.d0()) * lambda);
    }
  }
}

TEST(Parabolic, CNodeDependence)
{
  for (int l = 2; l <= 5; ++l) {
    for (int node = 1; node <= l; ++node) {
      // B_l: long roots at nodes 1..l-1; C_l: long root at node l
      EXPECT_EQ(make(Family::B, l, node).c(), node < l ? 2 : 1);
      EXPECT_EQ(make(Family::C, l, node).c(), node == l ? 2 : 1);
    }
  }
  EXPECT_EQ(make(Family::G, 2, 1).c(), 1);
  EXPECT_EQ(make(Family::G, 2, 2).c(), 3);
}

TEST(Parabolic, CominusculeNodes)
{
  EXPECT_TRUE(make(Family::A, 4, 2).cominuscule());
  EXPECT_TRUE(make(Family::B, 3, 1).cominuscule());
  EXPECT_FALSE(make(Family::B, 3, 2).cominuscule());
  EXPECT_TRUE(make(Family::C, 3, 3).cominuscule());
  EXPECT_TRUE(make(Family::D, 5, 5).cominuscule());
  EXPECT_FALSE(make(Family::D, 5, 3).cominuscule());
  EXPECT_EQ(make(Family::E, 8, 4).max_node_coefficient(), 6);
}

TEST(Parabolic, NodeOutOfRange)
{
  auto rs = build_root_system({Family::A, 2});
  for (int bad : {0, 3}) {
    try {
      build_parabolic(rs, bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
    }
  }
}

TEST(Parabolic, ConstantsJson)
{
  EXPECT_EQ(constants_json(make(Family::A, 3, 2)).dump(), R"({"group":"A3","node":2,"dim":4,"c":1,"d0":4,"mu":"3/1"})");
}
