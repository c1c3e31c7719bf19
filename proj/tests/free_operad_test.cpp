#include <gtest/gtest.h>

#include "nsmod/nsmod.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace nsmod;

namespace {

MulticyclicType mt(std::vector<LinearWord> ws) { return MulticyclicType::from_words(ws); }

ModuleSpec two_generators() {
  ModuleSpec m;
  m.generators.push_back({"m", false, {mt({{"p", "q", "r"}}), 0}});
  m.generators.push_back({"t", false, {mt({{"p"}, {"q"}}), 1}});
  return m;
}

// Classes among raw terminal graphs with at most vmax vertices and the given
// arity, deduplicated by exhaustive isomorphism search.
std::size_t raw_component(const TypedArity& t, int vmax) {
  std::vector<NsGraph> reps;
  for (int V = 1; V <= vmax; ++V) {
    for (auto& g : oracle::raw_graphs(t.stype.labels(), t.g, V, false)) {
      if (leg_type(g) != t.stype) continue;
      bool fresh = true;
      for (const auto& r : reps) {
        if (oracle::isomorphic(r, g)) {
          fresh = false;
          break;
        }
      }
      if (fresh) reps.push_back(std::move(g));
    }
  }
  return reps.size();
}

}  // namespace

TEST(FreeComponent, TerminalCorolla) {
  auto all = free_component(ModuleSpec::terminal(), {mt({{"a", "b", "c"}}), 0}, 1);
  ASSERT_EQ(all.size(), 1U);
  EXPECT_EQ(all[0].graph.vertices[0].tag, "*");
}

TEST(FreeComponent, TerminalCountsMatchRawGraphs) {
  const std::vector<std::pair<TypedArity, int>> cases{
      {{mt({{"a"}}), 1}, 2},       {{mt({{"a"}, {}}), 1}, 2},   {{mt({{"a", "b"}}), 0}, 3},
      {{mt({{"a"}, {"b"}}), 1}, 2}, {{mt({{"a", "b"}, {}}), 1}, 2}, {{mt({{}, {}, {}}), 2}, 2},
  };
  for (const auto& [t, vmax] : cases) {
    EXPECT_EQ(free_component(ModuleSpec::terminal(), t, vmax).size(), raw_component(t, vmax)) << text::format(t);
  }
  // The odd-parity arity has no terminal elements at all.
  EXPECT_TRUE(free_component(ModuleSpec::terminal(), {mt({{"a"}}), 1}, 2).empty());
}

TEST(FreeComponent, TwoGeneratorModule) {
  ModuleSpec m = two_generators();
  // A 4-cycle (a b c d) splits into two consecutive pairs in 2 ways.
  auto four = free_component(m, {mt({{"a", "b", "c", "d"}}), 0}, 2);
  EXPECT_EQ(four.size(), 2U);
  for (const auto& e : four) {
    for (const auto& v : e.graph.vertices) EXPECT_EQ(v.tag, "m");
  }
  auto annulus = free_component(m, {mt({{"a"}, {"b"}}), 1}, 1);
  ASSERT_EQ(annulus.size(), 1U);
  EXPECT_EQ(annulus[0].graph.vertices[0].tag, "t");
  // With two vertices both generators show up.
  std::set<std::string> tags;
  for (const auto& e : free_component(m, {mt({{"a"}, {"b"}}), 1}, 2)) {
    for (const auto& v : e.graph.vertices) tags.insert(v.tag);
    EXPECT_EQ(arity(e.graph), (TypedArity{mt({{"a"}, {"b"}}), 1}));
  }
  EXPECT_EQ(tags, (std::set<std::string>{"m", "t"}));
}

TEST(ComposeFree, Examples) {
  ModuleSpec m = ModuleSpec::terminal();
  FreeElement x = generator_corolla(m, "*", mt({{"a", "u"}}), 0);
  FreeElement y = generator_corolla(m, "*", mt({{"v", "b"}}), 0);
  FreeElement xy = compose_free(x, "u", y, "v");
  EXPECT_EQ(xy.vertex_count(), 2);
  EXPECT_EQ(xy.edge_count(), 1);
  EXPECT_EQ(arity(xy), (TypedArity{mt({{"a", "b"}}), 0}));
  FreeElement loop = contract_free(generator_corolla(m, "*", mt({{"x", "u", "y", "v"}}), 0), "u", "v");
  EXPECT_EQ(arity(loop), (TypedArity{mt({{"x"}, {"y"}}), 1}));
}

TEST(ComposeFree, ClashingFlagNamesAreRenamedApart) {
  NsGraph x = self_glue(corolla(mt({{"a", "h", "k", "u"}}), 0, "*"), "h", "k");
  NsGraph y = self_glue(corolla(mt({{"b", "h", "k", "v"}}), 0, "*"), "h", "k");
  FreeElement xy = compose_free(x, "u", y, "v");
  EXPECT_TRUE(validate(xy).empty());
  EXPECT_EQ(xy.leg_set(), (std::vector<Label>{"a", "b"}));
  EXPECT_THROW(compose_free(corolla(mt({{"a", "u"}})), "u", corolla(mt({{"a", "v"}})), "v"), Error);
}

TEST(ComposeFree, ResultIsCanonical) {
  testsupport::GraphGen gen(5);
  for (int t = 0; t < 100; ++t) {
    NsGraph x = gen.graph(6);
    NsGraph y = gen.graph(6);
    if (x.legs().empty() || y.legs().empty()) continue;
    const Label u = gen.one_leg(x);
    const Label v = gen.one_leg(y);
    FreeElement r = compose_free(x, u, y, v);
    EXPECT_EQ(canonize(r).graph, r);
    EXPECT_TRUE(oracle::isomorphic(r, graft(x, u, y, v)));
  }
}

TEST(GeneratorCorolla, RejectsMismatchedArity) {
  ModuleSpec m = two_generators();
  EXPECT_NO_THROW(generator_corolla(m, "m", mt({{"x", "y", "z"}}), 0));
  EXPECT_THROW(generator_corolla(m, "m", mt({{"x", "y"}}), 0), Error);
  EXPECT_THROW(generator_corolla(m, "q", mt({{"x"}}), 0), Error);
}

TEST(ModuleSpec, Validation) {
  ModuleSpec m;
  EXPECT_THROW(m.require_valid(), Error);
  m.generators = {{"a", true, {}}, {"a", true, {}}};
  EXPECT_THROW(m.require_valid(), Error);
}

TEST(ContractAlong, TerminalEvaluatorGivesArity) {
  testsupport::GraphGen gen(17);
  TerminalEvaluator ev;
  for (int t = 0; t < 200; ++t) {
    NsGraph g = gen.graph(14);
    EXPECT_EQ(contract_along(g, ev), arity(g));
  }
  NsGraph loop = self_glue(corolla(mt({{"x", "u", "y", "v"}})), "u", "v");
  EXPECT_EQ(contract_along(loop, ev), (TypedArity{mt({{"x"}, {"y"}}), 1}));
}

TEST(ContractAlong, ScheduleIndependence) {
  testsupport::GraphGen gen(23);
  TerminalEvaluator term;
  FreeEvaluator free;
  for (int t = 0; t < 150; ++t) {
    const bool sym = t % 3 == 0;
    NsGraph g = gen.graph(12, sym);
    std::vector<int> edges;
    for (int f = 0; f < g.flag_count(); ++f) {
      if (g.sigma[f] > f) edges.push_back(gen.uniform(0, 1) ? f : g.sigma[f]);
    }
    const GraphClass want = canonical(g);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(edges.begin(), edges.end(), gen.rng());
      if (!sym) EXPECT_EQ(contract_along(g, term, edges), arity(g));
      FreeElement r = contract_along(g, free, edges);
      EXPECT_EQ(canonical(r), want);
    }
  }
}

TEST(ContractAlong, BadSchedules) {
  NsGraph g = graft(corolla(mt({{"a", "u"}})), "u", corolla(mt({{"v", "b"}})), "v");
  TerminalEvaluator ev;
  const int u = *g.find_flag("u");
  const int v = *g.find_flag("v");
  const int a = *g.find_flag("a");
  auto code = [&](std::vector<int> s) {
    try {
      contract_along(g, ev, s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Unsupported;
  };
  EXPECT_EQ(code({a}), ErrorCode::NoSuchEdge);
  EXPECT_EQ(code({u, v}), ErrorCode::InvalidGlue);
  EXPECT_EQ(code({}), ErrorCode::InvalidGlue);
  EXPECT_EQ(contract_along(g, ev, std::vector<int>{v}), (TypedArity{mt({{"a", "b"}}), 0}));
}

TEST(ContractAlong, InvariantUnderEdgeContraction) {
  testsupport::GraphGen gen(31);
  TerminalEvaluator ev;
  for (int t = 0; t < 100; ++t) {
    NsGraph g = gen.graph(12);
    FlagIndex idx(g);
    for (int f = 0; f < g.flag_count(); ++f) {
      if (g.sigma[f] <= f || idx.vertex[f] == idx.vertex[g.sigma[f]]) continue;
      EXPECT_EQ(contract_along(contract_edge(g, f), ev), contract_along(g, ev));
    }
  }
}
