#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "gconvex/engine.hpp"
#include "gconvex/enumerate.hpp"
#include "gconvex/patterns.hpp"
#include "gconvex/recognizers.hpp"
#include "gconvex/walks.hpp"
#include "oracles.hpp"

using namespace gconvex;

namespace {

const std::vector<Graph>& small_connected() {
  static const std::vector<Graph> graphs = [] {
    std::vector<Graph> out;
    for (auto& level : connected_graphs_up_to(6))
      for (auto& g : level) out.push_back(g);
    return out;
  }();
  return graphs;
}

VertexSet set(int n, std::initializer_list<Vertex> vs) { return VertexSet::of(n, vs); }

}  // namespace

TEST(ExpandOnce, P4PlusPositionalRule) {
  const Graph p4 = Graph::path(4);  // a-b-c-d
  EXPECT_TRUE(expand_once(p4, ConvexitySpec::p4_plus(), set(4, {0, 1, 3})).is_full());
  EXPECT_TRUE(expand_once(p4, ConvexitySpec::p4_plus(), set(4, {0, 2, 3})).is_full());
  EXPECT_EQ(expand_once(p4, ConvexitySpec::p4_plus(), set(4, {0, 3})), set(4, {0, 3}));
}

TEST(ExpandOnce, FFreeTriangle) {
  const auto c = ConvexitySpec::f_free({patterns::complete(3)});
  EXPECT_TRUE(expand_once(Graph::complete(3), c, set(3, {1, 2})).is_full());
  EXPECT_EQ(expand_once(Graph::complete(3), c, set(3, {1})), set(3, {1}));
}

TEST(ExpandOnce, FullSetIsFixed) {
  const Graph g = patterns::l3_example().graph;
  for (const ConvexitySpec& c : standard_convexities()) EXPECT_TRUE(expand_once(g, c, g.vertices()).is_full());
}

TEST(Hull, GemGeodetic) {
  const PatternGraph gem = patterns::gem();
  EXPECT_EQ(hull(gem.graph, ConvexitySpec::geodetic(), set(5, {0, 3})), set(5, {0, 3, 4}));
}

TEST(Hull, L3ExampleMinusVertex2) {
  const Graph g = patterns::l3_example().graph;
  const auto sub = induced_subgraph(g, g.vertices().without(1));
  // labels 1 and 7
  EXPECT_EQ(hull(sub.graph, ConvexitySpec::lk(3), set(6, {0, 5})), set(6, {0, 5}));
  EXPECT_EQ(extreme_vertices(sub.graph, ConvexitySpec::lk(3), sub.graph.vertices()), set(6, {0, 5}));
}

TEST(Hull, EmptyAndFull) {
  const Graph g = Graph::cycle(6);
  for (const ConvexitySpec& c : standard_convexities()) {
    EXPECT_TRUE(hull(g, c, VertexSet::none(6)).empty());
    EXPECT_TRUE(hull(g, c, g.vertices()).is_full());
  }
}

TEST(Hull, MatchesBruteForceClosure) {
  const std::vector<std::string> kinds{"geodetic", "monophonic", "m3", "l2", "l3", "strong", "triangle-path", "p3"};
  for (const Graph& g : small_connected()) {
    if (g.order() > 5) break;
    for (const std::string& kind : kinds) {
      const ClosureSystem closure(g, parse_convexity(kind));
      for (Mask s = 0; s <= full_mask(g.order()); ++s) ASSERT_EQ(closure.hull_mask(s), oracle::hull(g, kind, s)) << kind;
    }
  }
}

TEST(Hull, ClosureConvexitiesMatchBruteForce) {
  const std::vector<Graph> family{Graph::complete(3), Graph::cycle(4)};
  for (const Graph& g : small_connected()) {
    const ClosureSystem ffree(g, ConvexitySpec::f_free({patterns::complete(3), patterns::cycle(4)}));
    const ClosureSystem p4(g, ConvexitySpec::p4_plus());
    for (Mask s = 0; s <= full_mask(g.order()); ++s) {
      ASSERT_EQ(ffree.hull_mask(s), oracle::hull_f_free(g, family, s));
      ASSERT_EQ(p4.hull_mask(s), oracle::hull_p4_plus(g, s));
    }
  }
}

TEST(Hull, ExtensiveMonotoneIdempotent) {
  std::mt19937 rng(3);
  for (const Graph& g : small_connected()) {
    std::uniform_int_distribution<Mask> pick(0, full_mask(g.order()));
    for (const ConvexitySpec& c : standard_convexities()) {
      const ClosureSystem closure(g, c);
      for (int k = 0; k < 6; ++k) {
        const Mask a = pick(rng);
        const Mask b = a | pick(rng);
        const Mask ha = closure.hull_mask(a);
        ASSERT_EQ(a & ~ha, 0U);
        ASSERT_EQ(ha & ~closure.hull_mask(b), 0U);
        ASSERT_EQ(closure.hull_mask(ha), ha);
        ASSERT_TRUE(closure.is_convex(VertexSet(g.order(), ha)));
      }
    }
  }
}

TEST(IsConvex, ClawUnderTollKinds) {
  const Graph claw = Graph::star(3);  // centre 0
  EXPECT_FALSE(is_convex(claw, ConvexitySpec::weakly_toll(), set(4, {1, 0, 2})));
  EXPECT_TRUE(is_convex(claw, ConvexitySpec::toll(), set(4, {1, 0, 2})));
}

TEST(IsConvex, SingletonsAlwaysConvex) {
  const Graph g = patterns::l3_example().graph;
  for (const ConvexitySpec& c : standard_convexities())
    for (Vertex v = 0; v < 7; ++v) EXPECT_TRUE(is_convex(g, c, set(7, {v}))) << c.name();
}

TEST(ExtremeVertices, GemAndClaw) {
  const PatternGraph gem = patterns::gem();
  EXPECT_EQ(extreme_vertices(gem.graph, ConvexitySpec::geodetic(), gem.graph.vertices()),
            set(5, {gem.vertex("a"), gem.vertex("d")}));
  EXPECT_TRUE(extreme_vertices(Graph::star(3), ConvexitySpec::weakly_toll(), VertexSet::all(4)).empty());
}

TEST(ExtremeVertices, RejectsNonConvexSet) {
  EXPECT_THROW(extreme_vertices(Graph::path(3), ConvexitySpec::geodetic(), set(3, {0, 2})), PreconditionError);
}

TEST(ExtremeVertices, MonophonicAndM3OfWholeGraph) {
  for (const Graph& g : small_connected()) {
    EXPECT_EQ(extreme_vertices(g, ConvexitySpec::monophonic(), g.vertices()), simplicial_vertices(g));
    EXPECT_EQ(extreme_vertices(g, ConvexitySpec::m3(), g.vertices()), semisimplicial_vertices(g));
  }
}

TEST(ConvexSets, TriangleUnderP3) {
  const auto sets = all_convex_sets(Graph::complete(3), ConvexitySpec::p3());
  const std::vector<VertexSet> expected{VertexSet::none(3), set(3, {0}), set(3, {1}), set(3, {2}), VertexSet::all(3)};
  EXPECT_EQ(sets, expected);
}

TEST(ConvexSets, ContainEmptyAndFullAndCloseUnderIntersection) {
  for (const Graph& g : small_connected()) {
    for (const ConvexitySpec& c : standard_convexities()) {
      const auto sets = all_convex_sets(g, c);
      std::vector<char> member(std::size_t{1} << g.order(), 0);
      for (const auto& s : sets) member[s.bits()] = 1;
      ASSERT_TRUE(member[0]);
      ASSERT_TRUE(member[full_mask(g.order())]);
      for (const auto& a : sets)
        for (const auto& b : sets) ASSERT_TRUE(member[a.bits() & b.bits()]) << c.name();
    }
  }
}

TEST(ConvexSets, GuardedAboveLimit) {
  EXPECT_THROW(all_convex_sets(Graph::path(13), ConvexitySpec::geodetic()), CapacityError);
  EXPECT_THROW(is_convex_geometry_mkm(Graph::path(13), ConvexitySpec::geodetic()), CapacityError);
  EXPECT_THROW(satisfies_antiexchange(Graph::path(13), ConvexitySpec::geodetic()), CapacityError);
}

TEST(Geometry, L3Example) {
  const Graph g = patterns::l3_example().graph;
  EXPECT_TRUE(is_convex_geometry_mkm(g, ConvexitySpec::lk(3)).verdict);
  const auto sub = induced_subgraph(g, g.vertices().without(1));
  const auto report = is_convex_geometry_mkm(sub.graph, ConvexitySpec::lk(3));
  EXPECT_FALSE(report.verdict);
  ASSERT_TRUE(report.violating_set);
  EXPECT_TRUE(report.violating_set->is_full());
  EXPECT_EQ(*report.extremes, set(6, {0, 5}));
  EXPECT_EQ(*report.hull_of_extremes, set(6, {0, 5}));
}

TEST(Geometry, SingleVertexIsAlwaysGeometry) {
  for (const ConvexitySpec& c : standard_convexities()) {
    EXPECT_TRUE(is_convex_geometry_mkm(Graph::complete(1), c).verdict);
    EXPECT_TRUE(satisfies_antiexchange(Graph::complete(1), c).verdict);
  }
}

TEST(Antiexchange, TriangleUnderP3) {
  const auto r = satisfies_antiexchange(Graph::complete(3), ConvexitySpec::p3());
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness);
  // first witness in bit order: S = {a}, x = b, y = c; any relabelling is the same shape
  EXPECT_EQ(r.witness->convex_set.size(), 1);
  EXPECT_NE(r.witness->x, r.witness->y);
}

TEST(Antiexchange, SquareUnderTrianglePath) {
  const auto r = satisfies_antiexchange(Graph::cycle(4), ConvexitySpec::triangle_path());
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness);
  // an edge of the square is convex and both remaining vertices pull each other in
  const Mask s = r.witness->convex_set.bits();
  EXPECT_EQ(std::popcount(s), 2);
  EXPECT_TRUE(Graph::cycle(4).adjacent(std::countr_zero(s), 31 - std::countl_zero(s)));
}

TEST(Antiexchange, PathUnderP4Plus) {
  const auto r = satisfies_antiexchange(Graph::path(4), ConvexitySpec::p4_plus());
  EXPECT_FALSE(r.verdict);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->convex_set, set(4, {0, 3}));
  EXPECT_EQ(r.witness->x, 1);
  EXPECT_EQ(r.witness->y, 2);
}

TEST(Antiexchange, WitnessesSatisfyTheirInvariant) {
  for (const Graph& g : small_connected()) {
    for (const ConvexitySpec& c : standard_convexities()) {
      const ClosureSystem closure(g, c);
      const auto r = satisfies_antiexchange(closure);
      if (r.verdict) continue;
      const auto& w = *r.witness;
      ASSERT_NE(w.x, w.y);
      ASSERT_FALSE(w.convex_set.contains(w.x));
      ASSERT_FALSE(w.convex_set.contains(w.y));
      ASSERT_TRUE(closure.is_convex(w.convex_set));
      ASSERT_TRUE(closure.hull(w.convex_set.with(w.y)).contains(w.x));
      ASSERT_TRUE(closure.hull(w.convex_set.with(w.x)).contains(w.y));
    }
  }
}

TEST(Geometry, MkmAndAntiexchangeAgree) {
  for (const Graph& g : small_connected()) {
    for (const ConvexitySpec& c : standard_convexities()) {
      const ClosureSystem closure(g, c);
      const auto mkm = is_convex_geometry_mkm(closure);
      ASSERT_EQ(mkm.verdict, satisfies_antiexchange(closure).verdict) << c.name();
      ASSERT_EQ(mkm.verdict, antiexchange_over_all_sets(closure)) << c.name();
      if (!mkm.verdict) {
        ASSERT_TRUE(closure.is_convex(*mkm.violating_set));
        ASSERT_NE(*mkm.hull_of_extremes, *mkm.violating_set);
      }
    }
  }
}
