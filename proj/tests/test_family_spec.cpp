#include <gtest/gtest.h>

#include <random>

#include "pebble/family_spec.hpp"

using namespace pebble;

TEST(FamilySpec, ParsesEveryKind) {
  auto p = parse_family_spec("path:3");
  EXPECT_EQ(p.kind, FamilyKind::path);
  EXPECT_EQ(p.params, std::vector<std::uint32_t>{3});
  auto j = parse_family_spec("jahangir:2,8");
  EXPECT_EQ(j.kind, FamilyKind::jahangir);
  EXPECT_EQ(j.params, (std::vector<std::uint32_t>{2, 8}));
  auto t = parse_family_spec("tree:0,0,1");
  EXPECT_EQ(t.kind, FamilyKind::tree);
  EXPECT_EQ(build_graph(t).vertex_count(), 4u);
  auto c = parse_family_spec("clone:jahangir:2,3@u*2");
  EXPECT_EQ(c.kind, FamilyKind::clone);
  EXPECT_EQ(c.clone_label, "u");
  EXPECT_EQ(c.clone_count, 2u);
  ASSERT_TRUE(c.base);
  EXPECT_EQ(c.base->kind, FamilyKind::jahangir);
  EXPECT_EQ(build_graph(c).vertex_count(), 9u);
}

TEST(FamilySpec, NestedClones) {
  auto g = build_graph("clone:clone:cycle:4@v0*1@v1*1");
  EXPECT_EQ(g.vertex_count(), 6u);
}

TEST(FamilySpec, CanonicalPrinterRoundTrips) {
  for (const char* text : {"path:0", "cycle:7", "tree:0,0,1,1", "jahangir:4,9", "clone:jahangir:2,3@u*3", "clone:clone:cycle:4@v0*1@v1*2"}) {
    auto spec = parse_family_spec(text);
    EXPECT_EQ(to_string(spec), text);
    EXPECT_EQ(parse_family_spec(to_string(spec)), spec);
  }
}

TEST(FamilySpec, ErrorsCarryPositions) {
  try {
    parse_family_spec("cycle:x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_family_spec("wheel:5"), ParseError);
  EXPECT_THROW(parse_family_spec("cycle:5,"), ParseError);
  EXPECT_THROW(parse_family_spec("jahangir:2"), ParseError);
  EXPECT_THROW(parse_family_spec(""), ParseError);
  EXPECT_THROW(parse_family_spec("clone:cycle:4*2"), ParseError);
}

TEST(FamilySpec, KindConstraintsAtBuildTime) {
  // range errors in the spec text carry a position like syntax errors
  EXPECT_THROW(build_graph("cycle:2"), ParseError);
  EXPECT_THROW(build_graph("jahangir:2,2"), ParseError);
  EXPECT_THROW(build_graph("tree:1"), ParseError);
  EXPECT_THROW(build_graph("clone:cycle:4@nosuch*1"), ParameterError);
}

TEST(FamilySpec, RandomSpecsRoundTrip) {
  std::mt19937_64 rng(11);
  auto num = [&](std::uint32_t lo, std::uint32_t hi) { return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng); };
  for (int i = 0; i < 300; ++i) {
    std::string text;
    switch (num(0, 3)) {
      case 0: text = "path:" + std::to_string(num(0, 20)); break;
      case 1: text = "cycle:" + std::to_string(num(3, 20)); break;
      case 2: text = "jahangir:" + std::to_string(num(1, 5)) + "," + std::to_string(num(3, 10)); break;
      case 3: {
        text = "tree:";
        const auto n = num(1, 9);
        for (std::uint32_t v = 1; v <= n; ++v) text += (v > 1 ? "," : "") + std::to_string(num(0, v - 1));
        break;
      }
    }
    if (num(0, 2) == 0) text = "clone:" + text + "@v0*" + std::to_string(num(1, 3));
    auto spec = parse_family_spec(text);
    ASSERT_EQ(to_string(spec), text);
    ASSERT_NO_THROW(build_graph(spec)) << text;
  }
}
