#include <gtest/gtest.h>

#include "pebble/extremal.hpp"

using namespace pebble;

namespace {

void expect_case_holds(const ExtremalCase& c) {
  for (const auto& q : verify_case(c)) EXPECT_TRUE(q.passed()) << c.name << " root " << c.graph.label(q.query.root);
}

}  // namespace

TEST(Extremal, DStarTwoEight) {
  auto c = build_dstar(2, 8);
  EXPECT_EQ(to_text(c.graph, c.distribution), "v3=1,v5=3,v7=1,v9=3,v11=1,v13=3,v15=1");
  EXPECT_EQ(c.distribution.size(), 13u);
  ASSERT_EQ(c.queries.size(), 3u);
  EXPECT_EQ(c.graph.label(c.queries[0].root), "u");
  expect_case_holds(c);
}

TEST(Extremal, DStarOddM) {
  auto c = build_dstar(2, 9);
  EXPECT_EQ(c.distribution.size(), 15u);
  // the M segment on P_7 reaches v16
  EXPECT_EQ(c.distribution[c.graph.vertex("v15")], 1u);
  EXPECT_EQ(c.distribution[c.graph.vertex("v16")], 1u);
  expect_case_holds(c);
}

TEST(Extremal, DStarSizeIsAlpha) {
  for (std::uint32_t n : {2u, 4u, 6u})
    for (std::uint32_t m = 8; m <= 12; ++m) EXPECT_EQ(build_dstar(n, m).distribution.size(), alpha(n, m).alpha) << n << "," << m;
  EXPECT_THROW(build_dstar(3, 8), ParameterError);
  EXPECT_THROW(build_dstar(2, 7), ParameterError);
}

TEST(Extremal, DStarPattern) {
  using enum SegmentClass;
  EXPECT_EQ(dstar_pattern(8), (std::vector<SegmentClass>{S, S, L, S, L, S, L, S}));
  EXPECT_EQ(dstar_pattern(9), (std::vector<SegmentClass>{S, S, L, S, L, S, L, M, S}));
}

TEST(Extremal, LowerBoundCase) {
  auto c = build_jahangir_lower_bound(2, 8);
  EXPECT_EQ(c.distribution.size(), 25u);
  EXPECT_EQ(c.distribution[9], 15u);  // 3 from D* plus 12
  EXPECT_EQ(c.graph.label(c.queries.at(0).root), "v1");
  expect_case_holds(c);
  EXPECT_EQ(build_jahangir_lower_bound(2, 9).distribution.size(), 27u);
  EXPECT_EQ(build_jahangir_lower_bound(4, 8).distribution.size() + 1, jahangir_pebbling_formula(4, 8));
}

TEST(Extremal, SegmentCasesForSmallN) {
  auto s = build_segment_extremal(2, SegmentClass::S);
  EXPECT_EQ(to_text(s.graph, s.distribution), "v1=1");
  auto l = build_segment_extremal(2, SegmentClass::L);
  EXPECT_EQ(to_text(l.graph, l.distribution), "v1=3");
  auto m = build_segment_extremal(2, SegmentClass::M);
  EXPECT_EQ(to_text(m.graph, m.distribution), "v0=1,v1=1");
  for (std::uint32_t n : {2u, 4u, 6u})
    for (auto p : {SegmentClass::S, SegmentClass::M, SegmentClass::L}) {
      auto c = build_segment_extremal(n, p);
      EXPECT_EQ(c.distribution.size(), segment_profile_bound(n, p));
      EXPECT_EQ(classify_path_segment(c.graph, c.distribution), p);
      expect_case_holds(c);
    }
  EXPECT_THROW(build_segment_extremal(3, SegmentClass::S), ParameterError);
}

TEST(Extremal, SegmentBoundsAreTight) {
  for (std::uint32_t n : {2u, 4u})
    for (auto p : {SegmentClass::S, SegmentClass::M, SegmentClass::L})
      for (auto end : {PathEnd::first, PathEnd::last}) {
        auto r = max_unsolvable(build_path(n), segment_profile_query(n, p, end));
        EXPECT_TRUE(r.exhaustive);
        EXPECT_EQ(r.size, segment_profile_bound(n, p)) << n << " " << to_string(p);
      }
}

TEST(Extremal, GreedyCounterexamples) {
  auto j = build_greedy_counterexample(0);
  EXPECT_EQ(j.distribution.size(), 8u);
  expect_case_holds(j);
  for (std::uint32_t m = 1; m <= 3; ++m) {
    auto c = build_greedy_counterexample(m);
    EXPECT_EQ(c.graph.vertex_count(), 7u + m);
    EXPECT_EQ(c.distribution.size(), 8u + m);
    expect_case_holds(c);
  }
}

TEST(Extremal, CounterexampleDependsOnHubPlacement) {
  // Rotating the load around the 6-cycle keeps the hub fixed. Even shifts
  // map hub neighbours to hub neighbours and stay greedy-unsolvable; odd
  // shifts put the heavy vertices next to the hub and greedy moves succeed.
  auto g = build_jahangir(2, 3);
  for (Vertex r = 0; r < 6; ++r) {
    Distribution d(g);
    d.add((1 + r) % 6, 3);
    d.add((5 + r) % 6, 3);
    d.add((0 + r) % 6, 1);
    d.add(6, 1);
    auto res = is_solvable(g, d, SolveQuery{(3 + r) % 6, 1, MovePolicy::greedy});
    EXPECT_EQ(res.unsolvable(), r % 2 == 0) << "shift " << r;
  }
}
