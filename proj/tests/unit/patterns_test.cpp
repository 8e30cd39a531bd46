#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "gconvex/canonical.hpp"
#include "gconvex/patterns.hpp"
#include "oracles.hpp"

using namespace gconvex;

TEST(Patterns, LibraryChecksPass) { EXPECT_TRUE(patterns::check_library().empty()); }

TEST(Patterns, GemIsPathPlusUniversalVertex) {
  const PatternGraph gem = patterns::gem();
  EXPECT_EQ(gem.graph.edge_count(), 7);
  const Vertex e = gem.vertex("e");
  EXPECT_EQ(gem.graph.degree(e), 4);
  EXPECT_TRUE(oracle::isomorphic(induced(gem.graph, full_mask(5) & ~bit(e)), Graph::path(4)));
}

TEST(Patterns, DocumentedEdgeLists) {
  auto has = [](const PatternGraph& p, std::string_view pairs) {
    int count = 0;
    for (std::size_t i = 0; i + 1 < pairs.size(); i += 3, ++count)
      if (!p.graph.adjacent(p.vertex(std::string(1, pairs[i])), p.vertex(std::string(1, pairs[i + 1])))) return false;
    return count == p.graph.edge_count();
  };
  EXPECT_TRUE(has(patterns::house(), "ab bc cd ad ae be"));
  EXPECT_TRUE(has(patterns::domino(), "ab bc cd ad ce ef df"));
  EXPECT_TRUE(has(patterns::letter_a(), "ab bc cd ad ce df"));
  EXPECT_TRUE(has(patterns::claw(), "ab ac ad"));
}

TEST(Patterns, ByName) {
  EXPECT_EQ(patterns::by_name("C5").graph, Graph::cycle(5));
  EXPECT_EQ(patterns::by_name("P4").graph, Graph::path(4));
  EXPECT_EQ(patterns::by_name("K3,3").graph, Graph::complete_bipartite(3, 3));
  EXPECT_EQ(patterns::by_name("claw").graph, patterns::by_name("K1,3").graph);
  EXPECT_EQ(patterns::by_name("4-gem").graph.order(), 6);
  EXPECT_THROW(patterns::by_name("nonsense"), InputError);
  EXPECT_THROW(patterns::by_name("C2"), InputError);
}

TEST(Patterns, NGemShape) {
  const PatternGraph g4 = patterns::n_gem(4);
  EXPECT_EQ(g4.graph.order(), 6);
  EXPECT_EQ(g4.graph.degree(g4.vertex("u")), 5);
  EXPECT_EQ(induced(g4.graph, full_mask(5)), Graph::path(5));
}

TEST(Patterns, OddCycles) {
  const auto cs = patterns::odd_cycles(8);
  ASSERT_EQ(cs.size(), 3U);
  EXPECT_EQ(cs[2].graph, Graph::cycle(7));
}

TEST(Patterns, KuratowskiSubdivisions) {
  const auto upto6 = patterns::kuratowski_subdivisions(6);
  // K5, K5 with one edge subdivided, K3,3
  EXPECT_EQ(upto6.size(), 3U);
  const auto upto8 = patterns::kuratowski_subdivisions(8);
  std::set<std::string> forms;
  for (const auto& p : upto8) {
    forms.insert(canonical_form(p.graph));
    int branch = 0;
    for (Vertex v = 0; v < p.graph.order(); ++v) {
      EXPECT_GE(p.graph.degree(v), 2);
      branch += p.graph.degree(v) >= 3;
    }
    EXPECT_TRUE(branch == 5 || branch == 6) << p.name;
  }
  EXPECT_EQ(forms.size(), upto8.size());
  // counted separately with networkx over all edge compositions
  EXPECT_EQ(upto8.size(), 17U);
}

TEST(ContainsInduced, Basics) {
  const PatternGraph gem = patterns::gem();
  const auto self = contains_induced(gem.graph, gem);
  ASSERT_TRUE(self);
  EXPECT_EQ(*self, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(contains_induced(Graph::cycle(5), Graph::path(4)));
  EXPECT_FALSE(contains_induced(Graph::cycle(6), patterns::claw()));
  EXPECT_FALSE(contains_induced(Graph::path(3), Graph::path(4)));
}

TEST(ContainsInduced, EmbeddingPreservesAdjacencyExactly) {
  for (unsigned seed = 0; seed < 100; ++seed) {
    const Graph g = oracle::random_graph(8, 0.5, seed);
    const Graph p = oracle::random_graph(4, 0.5, seed + 77);
    const auto emb = contains_induced(g, p);
    if (!emb) continue;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) EXPECT_EQ(p.adjacent(i, j), g.adjacent((*emb)[i], (*emb)[j]));
  }
}

TEST(ContainsInduced, AgreesWithSubsetEnumeration) {
  const std::vector<Graph> pats{Graph::path(4), Graph::cycle(4), patterns::claw().graph, patterns::gem().graph,
                                patterns::house().graph, Graph::complete(3), Graph::from_edge_list(4, {{0, 1}, {2, 3}})};
  for (unsigned seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::random_graph(5 + static_cast<int>(seed % 4), 0.5, seed);
    for (const Graph& p : pats) ASSERT_EQ(contains_induced(g, p).has_value(), oracle::has_induced(g, p)) << seed;
  }
}

TEST(InducedOccurrences, AgreesWithSubsetEnumeration) {
  for (unsigned seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::random_graph(7, 0.5, seed);
    const Graph p = Graph::path(4);
    std::vector<Mask> expected;
    for (Mask s = 0; s < (Mask{1} << 7); ++s)
      if (std::popcount(s) == 4 && oracle::isomorphic(oracle::induced(g, s), p)) expected.push_back(s);
    auto got = induced_occurrences(g, p);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
  }
}
