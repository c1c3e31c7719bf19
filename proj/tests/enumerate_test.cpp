#include <gtest/gtest.h>

#include "nsmod/nsmod.hpp"
#include "support/oracles.hpp"

using namespace nsmod;

TEST(EnumerateGraphs, Examples) {
  EXPECT_EQ(enumerate_graphs({"a", "b", "c"}, 0, 1).size(), 2U);
  auto empty = enumerate_graphs({}, 0, 1);
  ASSERT_EQ(empty.size(), 1U);
  EXPECT_EQ(empty[0].graph.flag_count(), 0);
  EXPECT_EQ(empty[0].graph.vertices[0].blocks.size(), 1U);
}

TEST(EnumerateGraphs, Errors) {
  EXPECT_THROW(enumerate_graphs({"a"}, 0, 0), Error);
  EXPECT_THROW(enumerate_graphs({"a", "a"}, 0, 1), Error);
}

struct CountCase {
  std::vector<Label> legs;
  int g;
  int vmax;
  bool symmetric;
};

class EnumerateAgainstRaw : public ::testing::TestWithParam<CountCase> {};

TEST_P(EnumerateAgainstRaw, CountsMatchBruteForce) {
  const CountCase c = GetParam();
  auto got = enumerate_graphs(c.legs, c.g, c.vmax, VertexConstraint::ribbon(), c.symmetric);
  EXPECT_EQ(got.size(), oracle::count_classes(c.legs, c.g, c.vmax, c.symmetric));
  std::vector<Label> want_legs = c.legs;
  std::sort(want_legs.begin(), want_legs.end());
  for (const auto& e : got) {
    EXPECT_TRUE(validate(e.graph).empty());
    EXPECT_EQ(genus(e.graph), c.g);
    EXPECT_EQ(e.graph.leg_set(), want_legs);
    EXPECT_LE(e.graph.vertex_count(), c.vmax);
    EXPECT_EQ(canonical(e.graph), e.cls);
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    for (std::size_t j = i + 1; j < got.size(); ++j) {
      if (got[i].graph.vertex_count() != got[j].graph.vertex_count()) continue;
      EXPECT_FALSE(oracle::isomorphic(got[i].graph, got[j].graph)) << got[i].cls.encoding;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, EnumerateAgainstRaw,
                         ::testing::Values(CountCase{{"a", "b", "c"}, 0, 1, false},
                                           CountCase{{"a"}, 1, 1, false},
                                           CountCase{{"a"}, 1, 2, false},
                                           CountCase{{"a", "b"}, 0, 2, false},
                                           CountCase{{"a", "b"}, 1, 2, false},
                                           CountCase{{"a", "b", "c"}, 0, 3, false},
                                           CountCase{{}, 1, 2, false},
                                           CountCase{{}, 2, 2, false},
                                           CountCase{{"a", "b"}, 1, 3, false},
                                           CountCase{{"a"}, 1, 2, true},
                                           CountCase{{"a", "b"}, 1, 2, true},
                                           CountCase{{}, 2, 3, true}));

TEST(EnumerateGraphs, DeterministicAndSorted) {
  auto a = enumerate_graphs({"b", "a"}, 1, 3);
  auto b = enumerate_graphs({"a", "b"}, 1, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].cls, b[i].cls);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1].cls, a[i].cls);
}

TEST(EnumerateGraphs, ConstraintRestrictsVertices) {
  VertexConstraint c;
  c.patterns = {VertexPattern{0, 1, std::vector<std::size_t>{3}}};
  auto trivalent = enumerate_graphs({"a", "b", "c", "d"}, 0, 2, c);
  for (const auto& e : trivalent) {
    for (const auto& v : e.graph.vertices) EXPECT_EQ(v.valence(), 3);
  }
  // 3 ways to pair up the legs, 2 cyclic orders at each trivalent vertex.
  EXPECT_EQ(trivalent.size(), 3U * 2U * 2U);
}
