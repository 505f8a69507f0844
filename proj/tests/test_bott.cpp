#include "flagcohom/bott.hpp"
#include "flagcohom/io.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace flagcohom;

namespace {

ParabolicData make(Family f, int rank, int node) { return build_parabolic(build_root_system({f, rank}), node); }

CohomologyVector vec(std::initializer_list<int> xs)
{
  CohomologyVector v;
  for (int x : xs) v.h.push_back(x);
  return v;
}

} // namespace

TEST(Bott, ClassifyWeightExamples)
{
  RootSystem a1({Family::A, 1});
  auto zero = classify_weight(Vec(2, Rational(0)), a1);
  EXPECT_FALSE(zero.singular());
  EXPECT_EQ(zero.index, 0);
  EXPECT_EQ(zero.dimension, 1);
  EXPECT_TRUE(classify_weight(-a1.fundamental_weight(1), a1).singular());
  auto minus_two = classify_weight(-a1.simple_root(1), a1);
  EXPECT_FALSE(minus_two.singular());
  EXPECT_EQ(minus_two.index, 1);
  EXPECT_EQ(minus_two.dimension, 1);
  for (int k = 0; k <= 12; ++k) {
    auto v = classify_weight(Rational(k) * a1.fundamental_weight(1), a1);
    EXPECT_FALSE(v.singular());
    EXPECT_EQ(v.index, 0);
    EXPECT_EQ(v.dimension, k + 1);
  }
}

TEST(Bott, WeylDimensionsOfKnownRepresentations)
{
  struct Case {
    LieType t;
    int weight;
    int dim;
  };
  // minuscule and adjoint representations of the exceptional types, and the spin representation of D5
  for (const auto& c : {Case{{Family::G, 2}, 1, 7}, Case{{Family::G, 2}, 2, 14}, Case{{Family::F, 4}, 4, 26},
                        Case{{Family::F, 4}, 1, 52}, Case{{Family::E, 6}, 1, 27}, Case{{Family::E, 6}, 2, 78},
                        Case{{Family::E, 7}, 7, 56}, Case{{Family::E, 7}, 1, 133}, Case{{Family::E, 8}, 8, 248},
                        Case{{Family::D, 5}, 5, 16}, Case{{Family::B, 3}, 3, 8}}) {
    RootSystem rs(c.t);
    auto v = classify_weight(rs.fundamental_weight(c.weight), rs);
    EXPECT_EQ(v.dimension, c.dim) << c.t.name() << " lambda_" << c.weight;
  }
}

TEST(Bott, LineBundleExamples)
{
  auto pd = make(Family::A, 2, 1);
  EXPECT_EQ(line_bundle_cohomology(pd, 0), vec({1, 0, 0}));
  EXPECT_EQ(line_bundle_cohomology(pd, 2), vec({6, 0, 0}));
  EXPECT_EQ(line_bundle_cohomology(pd, -3), vec({0, 0, 1}));
  EXPECT_EQ(line_bundle_cohomology(pd, -1), vec({0, 0, 0}));
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(line_bundle_cohomology(pd, k)[0], oracle::monomials(2, k));
  // Pluecker embedding of Gr(2,4)
  EXPECT_EQ(line_bundle_cohomology(make(Family::A, 3, 2), 1)[0], 6);
}

TEST(Bott, TwistedFormsExamples)
{
  auto pd = make(Family::A, 2, 1);
  EXPECT_EQ(twisted_forms_cohomology(pd, 1, 0), vec({0, 1, 0}));
  EXPECT_EQ(twisted_forms_cohomology(pd, 1, 1), vec({0, 0, 0}));
  EXPECT_EQ(twisted_forms_cohomology(pd, 1, 2), vec({3, 0, 0}));
  EXPECT_EQ(twisted_forms_cohomology(pd, -1, 2), vec({0, 0, 0}));
  EXPECT_EQ(twisted_forms_cohomology(pd, 3, 2), vec({0, 0, 0}));
  // q = 0 is the line bundle
  for (int k = -6; k <= 6; ++k) EXPECT_EQ(twisted_forms_cohomology(pd, 0, k), line_bundle_cohomology(pd, k));
}

TEST(Bott, ShortcutExamples)
{
  auto pd = make(Family::A, 2, 1);
  EXPECT_TRUE(vanishing_shortcut(pd, 1, 3));
  EXPECT_FALSE(vanishing_shortcut(pd, 2, 1));
  EXPECT_TRUE(vanishing_shortcut(pd, 0, 1));
}

TEST(Bott, HodgeDiamond)
{
  EXPECT_EQ(hodge_diamond(make(Family::A, 2, 1)), (std::vector<BigInt>{1, 1, 1}));
  EXPECT_EQ(hodge_diamond(make(Family::A, 3, 2)), (std::vector<BigInt>{1, 1, 2, 1, 1}));
  EXPECT_EQ(hodge_diamond(make(Family::B, 2, 1)), (std::vector<BigInt>{1, 1, 1, 1}));
}

// The integer pairing route and the rational ambient route must agree on every summand.
TEST(Bott, SummandRoutesAgree)
{
  for (auto t : all_types(4)) {
    auto rs = build_root_system(t);
    for (int node = 1; node <= rs->rank(); ++node) {
      auto pd = build_parabolic(rs, node);
      auto reps = enumerate_coset_reps(pd);
      for (int q = 0; q <= pd.dim_x(); ++q)
        for (int k : {-5, -2, -1, 0, 1, 3}) {
          for (const auto& s : twisted_forms_summands(pd, reps, q, k)) {
            auto ref = classify_weight(s.weight, *rs);
            ASSERT_EQ(ref.singular(), s.singular()) << t.name() << " node " << node;
            if (!s.singular()) {
              EXPECT_EQ(ref.index, s.index);
              EXPECT_EQ(ref.dimension, s.dimension);
            }
          }
        }
    }
  }
}

TEST(Bott, CompactRootsNeverObstruct)
{
  for (auto t : all_types(5)) {
    auto rs = build_root_system(t);
    for (int node = 1; node <= rs->rank(); ++node) {
      auto pd = build_parabolic(rs, node);
      auto reps = enumerate_coset_reps(pd);
      PairingTables tables(pd);
      for (const auto& grade : reps.by_length)
        for (const auto& w : grade)
          for (int k : {-7, 0, 7}) {
            auto p = tables.doubled_pairings(w, k);
            for (int idx : pd.compact_indices()) EXPECT_GT(p[static_cast<std::size_t>(idx)], 0);
          }
    }
  }
}

TEST(Bott, DichotomyAndZeroTwist)
{
  for (auto t : all_types(4)) {
    auto rs = build_root_system(t);
    for (int node = 1; node <= rs->rank(); ++node) {
      auto pd = build_parabolic(rs, node);
      auto reps = enumerate_coset_reps(pd);
      for (int q = 0; q <= pd.dim_x(); ++q) {
        auto h = twisted_forms_cohomology(pd, reps, q, 0);
        for (int i = 0; i <= pd.dim_x(); ++i)
          EXPECT_EQ(h[i], i == q ? BigInt(reps.grade(q).size()) : BigInt(0)) << t.name() << " node " << node;
        for (const auto& s : twisted_forms_summands(pd, reps, q, 2)) {
          if (s.singular()) EXPECT_EQ(s.dimension, 0);
          else EXPECT_GT(s.dimension, 0);
        }
      }
    }
  }
}

TEST(Bott, SerreDualitySample)
{
  for (auto [f, r, node] : {std::tuple{Family::G, 2, 1}, std::tuple{Family::G, 2, 2}, std::tuple{Family::F, 4, 1},
                            std::tuple{Family::F, 4, 4}, std::tuple{Family::E, 6, 1}}) {
    auto pd = make(f, r, node);
    auto reps = enumerate_coset_reps(pd);
    const int n = pd.dim_x();
    for (int q = 0; q <= n; ++q)
      for (int k = -3; k <= 3; ++k) {
        auto h = twisted_forms_cohomology(pd, reps, q, k);
        auto dual = twisted_forms_cohomology(pd, reps, n - q, -k);
        for (int i = 0; i <= n; ++i) EXPECT_EQ(h[i], dual[n - i]) << pd.group_name() << " q=" << q << " k=" << k;
      }
  }
}

TEST(Bott, SimplifiedCriterionAgreesOnCoefficientOneRoots)
{
  for (auto t : all_types(5)) {
    auto rs = build_root_system(t);
    for (int node = 1; node <= rs->rank(); ++node) {
      auto pd = build_parabolic(rs, node);
      auto reps = enumerate_coset_reps(pd);
      PairingTables tables(pd);
      const auto j = static_cast<std::size_t>(node - 1);
      for (const auto& grade : reps.by_length)
        for (const auto& w : grade)
          for (int k = -8; k <= 8; ++k) {
            auto p = tables.doubled_pairings(w, k);
            bool general_on_coeff_one = false;
            for (int idx : pd.noncompact_indices())
              if (rs->positive_root_coords()[static_cast<std::size_t>(idx)][j] == 1 && p[static_cast<std::size_t>(idx)] == 0)
                general_on_coeff_one = true;
            EXPECT_EQ(simplified_singular(pd, w, k), general_on_coeff_one);
            if (pd.cominuscule()) {
              auto v = classify_summand(tables, w, k);
              EXPECT_EQ(v.singular(), simplified_singular(pd, w, k));
              if (!v.singular()) {
                EXPECT_EQ(v.index, simplified_index(pd, w, k));
              }
            }
          }
    }
  }
}

TEST(Bott, CacheIsWriteOnceAndThreadSafe)
{
  CosetRepCache cache;
  auto pd = make(Family::D, 5, 2);
  std::vector<std::shared_ptr<const GradedCosetReps>> got(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < got.size(); ++i) threads.emplace_back([&, i] { got[i] = cache.get(pd); });
  for (auto& th : threads) th.join();
  for (const auto& g : got) EXPECT_EQ(g.get(), got.front().get());
  EXPECT_EQ(cache.size(), 1u);
  EXPECT_THROW(cache.get(make(Family::E, 8, 4), 1000), CapExceeded);
}

TEST(Bott, TableJson)
{
  auto pd = make(Family::A, 2, 1);
  auto table = cohomology_table(pd, {1, 1}, {2, 2});
  EXPECT_EQ(cohomology_table_json(table).dump(),
            R"({"group":"A2","node":1,"dim":2,"cells":[{"q":1,"k":2,"h":["3","0","0"]}]})");
  EXPECT_TRUE(cohomology_table(pd, {0, 2}, {3, 2}).entries.empty());
  auto outside = cohomology_table(pd, {-1, 3}, {0, 0});
  EXPECT_EQ(outside.entries.size(), 5u);
  EXPECT_TRUE(outside.entries.at({-1, 0}).all_zero());
  EXPECT_TRUE(outside.entries.at({3, 0}).all_zero());
}
