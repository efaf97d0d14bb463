#include <gtest/gtest.h>

#include "pebble/exact.hpp"
#include "pebble/formulas.hpp"
#include "pebble/tree_catalog.hpp"
#include "support/oracles.hpp"

using namespace pebble;

TEST(Formulas, TreeExamples) {
  EXPECT_EQ(tree_pebbling_formula(build_path(3), 0), 8u);
  std::vector<std::uint32_t> star{0, 0, 0};  // K_{1,3}, centre 0
  auto k13 = build_tree(star);
  EXPECT_EQ(tree_pebbling_formula(k13, 1), 5u);
  EXPECT_EQ(max_path_partition(k13, 1).sizes, (std::vector<std::uint32_t>{2, 1}));
  EXPECT_EQ(tree_pebbling_formula(build_path(1), 0), 2u);
  EXPECT_EQ(tree_pebbling_formula(build_path(0), 0), 1u);
  EXPECT_THROW(tree_pebbling_formula(build_cycle(4), 0), ParameterError);
}

TEST(Formulas, PathPartitionIsMaximumAmongAll) {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    for (const auto& parents : trees_on(n)) {
      auto t = build_tree(parents);
      for (Vertex r = 0; r < n; ++r) {
        auto mine = max_path_partition(t, r);
        ASSERT_EQ(mine.total(), t.edge_count());
        ASSERT_TRUE(std::is_sorted(mine.sizes.rbegin(), mine.sizes.rend()));
        auto all = oracle::all_path_partitions(t, r);
        ASSERT_NE(std::find(all.begin(), all.end(), mine.sizes), all.end());
        for (const auto& other : all) ASSERT_TRUE(oracle::majorizes(mine.sizes, other));
      }
    }
  }
}

TEST(Formulas, TreeFormulaMatchesBruteForceOnSmallTrees) {
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (const auto& parents : trees_on(n)) {
      auto t = build_tree(parents);
      for (Vertex r = 0; r < n; ++r) ASSERT_EQ(pebbling_number_rooted(t, r).value, tree_pebbling_formula(t, r));
    }
}

TEST(Formulas, CycleValues) {
  const std::uint64_t expected[] = {3, 4, 5, 8, 11, 16, 21, 32};
  for (std::uint64_t k = 3; k <= 10; ++k) EXPECT_EQ(cycle_pebbling_formula(k), expected[k - 3]);
  EXPECT_EQ(cycle_pebbling_formula(2), 2u);
  EXPECT_EQ(cycle_formula_provenance(2), Provenance::convention);
  EXPECT_EQ(cycle_formula_provenance(5), Provenance::theorem);
  EXPECT_THROW(cycle_pebbling_formula(1), ParameterError);
  EXPECT_THROW(cycle_pebbling_formula(200), OverflowError);
}

TEST(Formulas, CycleFormulaMatchesBruteForce) {
  for (std::uint32_t k = 3; k <= 7; ++k) EXPECT_EQ(pebbling_number(build_cycle(k)).value, cycle_pebbling_formula(k));
}

TEST(Formulas, Convexity) {
  auto checks = check_cycle_convexity(3, 12);
  ASSERT_EQ(checks.size(), 10u);
  for (const auto& c : checks) EXPECT_TRUE(c.holds()) << c.n;
  EXPECT_EQ(checks[0].lhs, 6u);  // f(C_2) + f(C_4)
  EXPECT_EQ(checks[1].lhs, 8u);
  EXPECT_EQ(checks[3].lhs, 16u);
  EXPECT_THROW(check_cycle_convexity(2, 5), ParameterError);
}

TEST(Formulas, TFoldEvenCycle) {
  EXPECT_EQ(t_pebbling_even_cycle(2, 3), 12u);
  EXPECT_EQ(t_pebbling_even_cycle(2, 1), cycle_pebbling_formula(4));
  EXPECT_EQ(t_pebbling_even_cycle(3, 1), cycle_pebbling_formula(6));
  EXPECT_THROW(t_pebbling_even_cycle(0, 1), ParameterError);
  EXPECT_THROW(t_pebbling_even_cycle(2, 0), ParameterError);
}

TEST(Formulas, Alpha) {
  EXPECT_EQ(alpha(2, 8).alpha, 13u);
  EXPECT_EQ(alpha(2, 9).alpha, 15u);
  auto a = alpha(4, 8);
  EXPECT_EQ(a.alpha, 33u);
  EXPECT_EQ(a.s_max, 3u);
  EXPECT_EQ(a.m_max, 4u);
  EXPECT_EQ(a.l_max, 7u);
  EXPECT_THROW(alpha(3, 8), ParameterError);
  EXPECT_THROW(alpha(2, 7), ParameterError);
}

TEST(Formulas, Jahangir) {
  EXPECT_EQ(jahangir_pebbling_formula(2, 8), 26u);
  EXPECT_EQ(jahangir_pebbling_formula(2, 9), 28u);
  EXPECT_EQ(jahangir_pebbling_formula(4, 8), 90u);
  for (std::uint64_t m = 8; m <= 64; ++m) ASSERT_EQ(jahangir_pebbling_formula(2, m), j2m_formula(m));
  EXPECT_EQ(j2m_formula(10), 30u);
  EXPECT_THROW(j2m_formula(7), ParameterError);
  try {
    jahangir_pebbling_formula(3, 8);
    FAIL();
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find("n must be even"), std::string::npos);
  }
}
