#include <gtest/gtest.h>

#include <random>

#include "pebble/graph.hpp"
#include "support/oracles.hpp"

using namespace pebble;

TEST(Graph, PathHasLengthPlusOneVertices) {
  auto g = build_path(4);
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(build_path(0).vertex_count(), 1u);
}

TEST(Graph, CycleNeedsThreeVertices) {
  auto g = build_cycle(5);
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_TRUE(g.adjacent(4, 0));
  EXPECT_THROW(build_cycle(2), ParameterError);
}

TEST(Graph, TreeFromParentList) {
  // root 0, vertex 1 and 2 under 0, vertex 3 under 1
  std::vector<std::uint32_t> parents{0, 0, 1};
  auto g = build_tree(parents);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_TRUE(g.adjacent(3, 1));
  std::vector<std::uint32_t> loop{2, 1};  // 1 -> 2 -> 1
  EXPECT_THROW(build_tree(loop), ParameterError);
  std::vector<std::uint32_t> out_of_range{5};
  EXPECT_THROW(build_tree(out_of_range), ParameterError);
}

TEST(Graph, JahangirLayout) {
  auto g = build_jahangir(2, 8);
  EXPECT_EQ(g.vertex_count(), 17u);
  EXPECT_EQ(g.edge_count(), 16u + 8u);
  const auto& j = *g.jahangir();
  EXPECT_EQ(j.hub, 16u);
  EXPECT_EQ(g.label(j.hub), "u");
  EXPECT_EQ(g.vertex("hub"), j.hub);
  EXPECT_EQ(g.degree(j.hub), 8u);
  for (std::uint32_t i = 0; i < 8; ++i) EXPECT_TRUE(g.adjacent(j.hub, 2 * i));
  EXPECT_FALSE(g.adjacent(j.hub, 1));
  EXPECT_EQ(j.segments[7], (std::vector<Vertex>{14, 15, 0}));
  EXPECT_EQ(j.segment_midpoint(4), 9u);
  EXPECT_THROW(build_jahangir(2, 2), ParameterError);
  EXPECT_THROW(build_jahangir(0, 4), ParameterError);
}

TEST(Graph, OneBasedLabels) {
  auto g = build_jahangir(2, 3, LabelOptions{1});
  EXPECT_EQ(g.label(0), "v1");
  EXPECT_EQ(g.label(6), "v7");
  EXPECT_EQ(g.vertex("u"), 6u);
  EXPECT_EQ(g.vertex("v4"), 3u);
}

TEST(Graph, CloneCopiesNeighbourhood) {
  auto base = build_jahangir(2, 3);
  auto g = clone_vertex(base, base.vertex("u"), 2);
  EXPECT_EQ(g.vertex_count(), 9u);
  for (Vertex c : {g.vertex("u#1"), g.vertex("u#2")}) {
    EXPECT_EQ(g.degree(c), 3u);
    for (Vertex w : {0u, 2u, 4u}) EXPECT_TRUE(g.adjacent(c, w));
    EXPECT_FALSE(g.adjacent(c, g.vertex("u")));
  }
}

TEST(Graph, RejectsBadEdgeLists) {
  std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(Graph::from_edges(1, loop), ParameterError);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(2, dup), ParameterError);
  std::vector<Edge> split{{0, 1}};
  EXPECT_THROW(Graph::from_edges(3, split), ParameterError);
}

TEST(Graph, FingerprintSeparatesShapes) {
  EXPECT_NE(build_cycle(5).fingerprint(), build_path(4).fingerprint());
  EXPECT_EQ(build_cycle(5).fingerprint(), build_cycle(5).fingerprint());
}

TEST(Graph, BfsMatchesFloydWarshallOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::uint32_t>(1, 12)(rng);
    auto g = oracle::random_connected_graph(rng, n, 0.25);
    auto fw = oracle::floyd_warshall(g);
    for (Vertex s = 0; s < n; ++s) {
      auto d = distances_from(g, s);
      for (Vertex t = 0; t < n; ++t) ASSERT_EQ(d[t], fw[s][t]);
    }
  }
}

TEST(Graph, BipartitionOfEvenAndOddCycles) {
  EXPECT_TRUE(bipartition(build_cycle(6)).has_value());
  EXPECT_FALSE(bipartition(build_cycle(7)).has_value());
  EXPECT_FALSE(bipartition(build_jahangir(1, 3)).has_value());
}
