#include <gtest/gtest.h>

#include "nsmod/nsmod.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace nsmod;

namespace {

MulticyclicType mt(std::vector<LinearWord> ws) { return MulticyclicType::from_words(ws); }

}  // namespace

TEST(Canonical, PermutedFlagNamesGiveTheSameClass) {
  NsGraph a = corolla(mt({{"a", "b", "c"}}));
  NsGraph b = a;
  b.flags = {"p", "q", "r"};
  EXPECT_EQ(canonical(a), canonical(b));
  std::mt19937_64 rng(1);
  EXPECT_EQ(canonical(a), canonical(oracle::scramble(a, rng)));
}

TEST(Canonical, MirrorBlockIsADifferentClass) {
  EXPECT_NE(canonical(corolla(mt({{"a", "b", "c"}}))), canonical(corolla(mt({{"a", "c", "b"}}))));
  EXPECT_FALSE(oracle::isomorphic(corolla(mt({{"a", "b", "c"}})), corolla(mt({{"a", "c", "b"}}))));
}

TEST(Canonical, AnnulusIsNotALoopCorolla) {
  NsGraph annulus = corolla(mt({{"a"}, {"b"}}), 1);
  NsGraph loop = self_glue(corolla(mt({{"a", "u", "b", "v"}})), "u", "v");
  EXPECT_EQ(arity(annulus), arity(loop));
  EXPECT_NE(canonical(annulus), canonical(loop));
}

TEST(Canonical, TagsAndGenusMatter) {
  EXPECT_NE(canonical(corolla(mt({{"a"}}), 0, "m")), canonical(corolla(mt({{"a"}}), 0, "t")));
  EXPECT_NE(canonical(corolla(mt({{"a"}}), 0)), canonical(corolla(mt({{"a"}}), 2)));
  EXPECT_NE(canonical(corolla(mt({{"a"}, {}}))), canonical(corolla(mt({{"a"}, {}, {}}))));
}

TEST(Canonical, SymmetricIgnoresOrder) {
  NsGraph a = sym_corolla({"a", "b", "c"});
  NsGraph b = a;
  std::swap(b.vertices[0].blocks[0][0], b.vertices[0].blocks[0][2]);
  EXPECT_EQ(canonical(a), canonical(b));
  EXPECT_NE(canonical(a), canonical(corolla(mt({{"a", "b", "c"}}))));
}

TEST(Canonical, RepresentativeIsIsomorphicAndStable) {
  testsupport::GraphGen gen(77);
  for (int t = 0; t < 150; ++t) {
    const bool sym = t % 3 == 0;
    NsGraph g = gen.graph(10, sym);
    Canonized c = canonize(g);
    EXPECT_TRUE(validate(c.graph).empty());
    EXPECT_TRUE(oracle::isomorphic(g, c.graph));
    EXPECT_EQ(canonize(c.graph).graph, c.graph);
    EXPECT_EQ(canonize(c.graph).cls, c.cls);
  }
}

TEST(Canonical, AgreesWithExhaustiveSearchOnRandomPairs) {
  testsupport::GraphGen gen(2024);
  std::mt19937_64 rng(9);
  int positive = 0;
  int negative = 0;
  for (int t = 0; t < 300; ++t) {
    const bool sym = t % 4 == 0;
    NsGraph a = gen.graph(8, sym);
    NsGraph b = oracle::scramble(a, rng);
    EXPECT_TRUE(are_isomorphic(a, b));
    EXPECT_TRUE(oracle::isomorphic(a, b));
    ++positive;
    // Perturb one vertex's structure while keeping the flag count.
    NsGraph c = b;
    auto& v = c.vertices[static_cast<std::size_t>(gen.uniform(0, c.vertex_count() - 1))];
    if (gen.uniform(0, 1) == 0) {
      v.genus += 1;
    } else if (!v.blocks[0].empty() && !sym) {
      std::reverse(v.blocks[0].begin(), v.blocks[0].end());
    } else {
      v.blocks.emplace_back();
      if (sym) continue;
    }
    const bool want = oracle::isomorphic(a, c);
    EXPECT_EQ(are_isomorphic(a, c), want);
    negative += want ? 0 : 1;
  }
  EXPECT_GT(positive, 0);
  EXPECT_GT(negative, 50);
}

TEST(Canonical, LegLabelsAreRespected) {
  NsGraph a = corolla(mt({{"a", "b"}, {"c"}}));
  NsGraph b = corolla(mt({{"a", "c"}, {"b"}}));
  EXPECT_NE(canonical(a), canonical(b));
  EXPECT_FALSE(oracle::isomorphic(a, b));
}
