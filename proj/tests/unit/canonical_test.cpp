#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gconvex/canonical.hpp"
#include "oracles.hpp"

using namespace gconvex;

namespace {

Graph relabel(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return g.permuted(order);
}

}  // namespace

TEST(Canonical, CycleUnderEveryRelabelling) {
  const Graph c5 = Graph::cycle(5);
  const std::string form = canonical_form(c5);
  std::vector<Vertex> order{0, 1, 2, 3, 4};
  do {
    ASSERT_EQ(canonical_form(c5.permuted(order)), form);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(Canonical, PathAndClawDiffer) {
  EXPECT_NE(canonical_form(Graph::path(4)), canonical_form(Graph::star(3)));
}

TEST(Canonical, ElevenGraphsOnFourVertices) {
  std::set<std::string> forms;
  for (const Graph& g : oracle::all_labelled_graphs(4)) forms.insert(canonical_form(g));
  EXPECT_EQ(forms.size(), 11U);
}

TEST(Canonical, ClassCountsMatchBruteForce) {
  // numbers of graphs on n vertices up to isomorphism
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    std::set<std::string> forms;
    std::set<std::string> brute;
    for (const Graph& g : oracle::all_labelled_graphs(n)) {
      forms.insert(canonical_form(g));
      if (n <= 5) brute.insert(oracle::brute_canonical(g));
    }
    EXPECT_EQ(forms.size(), expected[n]) << n;
    if (n <= 5) EXPECT_EQ(brute.size(), expected[n]) << n;
  }
}

TEST(Canonical, InvariantUnderRandomRelabelling) {
  std::mt19937 rng(7);
  for (unsigned seed = 0; seed < 200; ++seed) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(seed % 8), 0.45, seed);
    const std::string form = canonical_form(g);
    for (int k = 0; k < 20; ++k) ASSERT_EQ(canonical_form(relabel(g, rng)), form);
  }
}

TEST(Canonical, InvariantOnRegularAndTwinHeavyGraphs) {
  std::mt19937 rng(11);
  const std::vector<Graph> hard{Graph::complete_bipartite(3, 3), Graph::cycle(8), Graph::complete(7),
                                Graph::complete_bipartite(4, 5), Graph::cycle(6).complement(),
                                Graph::from_edge_list(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7},
                                                           {3, 4}, {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9},
                                                           {7, 9}})};
  for (const Graph& g : hard) {
    const std::string form = canonical_form(g);
    for (int k = 0; k < 20; ++k) ASSERT_EQ(canonical_form(relabel(g, rng)), form);
  }
}

TEST(Canonical, IsomorphismAgreesWithPermutationSearch) {
  for (unsigned seed = 0; seed < 300; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const Graph a = oracle::random_graph(n, 0.5, seed);
    const Graph b = oracle::random_graph(n, 0.5, seed + 1000);
    ASSERT_EQ(isomorphic(a, b), oracle::isomorphic(a, b)) << seed;
  }
}

TEST(Canonical, CanonicalGraphIsIsomorphicCopy) {
  for (unsigned seed = 0; seed < 50; ++seed) {
    const Graph g = oracle::random_graph(7, 0.5, seed);
    const Graph c = canonical_graph(g);
    EXPECT_TRUE(oracle::isomorphic(g, c));
    EXPECT_EQ(canonical_graph(c), c);
  }
}

TEST(Canonical, GuardedAboveLimit) {
  EXPECT_THROW(canonical_form(Graph::path(13)), CapacityError);
  EXPECT_NO_THROW(canonical_form(Graph::path(13), Limits{13}));
}
