#include <gtest/gtest.h>

#include <set>

#include "gconvex/graph_io.hpp"
#include "gconvex/harness.hpp"
#include "gconvex/patterns.hpp"

using namespace gconvex;

TEST(Registry, IdsAreUniqueAndFindable) {
  std::set<std::string> ids;
  for (const Theorem& t : theorem_registry()) {
    EXPECT_TRUE(ids.insert(t.id).second) << t.id;
    EXPECT_EQ(find_theorem(t.id).id, t.id);
  }
  for (const Lemma& l : lemma_registry()) {
    EXPECT_TRUE(ids.insert(l.id).second) << l.id;
    EXPECT_EQ(find_lemma(l.id).id, l.id);
  }
  EXPECT_EQ(find_theorem("T-LK-NEC:4").direction, Direction::only_if);
  EXPECT_EQ(find_theorem("INV:T-MONO").id, "INV:T-MONO");
  EXPECT_THROW(find_theorem("T-NOPE"), InputError);
  EXPECT_THROW(find_lemma("L-NOPE"), InputError);
}

TEST(Verify, TrueTheoremsHaveNoCertificates) {
  for (std::string_view id : {"T-MONO", "T-GEO", "C-P4PLUS", "T-P3", "T-LK-NEC:3"}) {
    const auto r = verify_theorem(find_theorem(id), {.max_n = 6});
    EXPECT_TRUE(r.certificates.empty()) << id;
    EXPECT_EQ(r.summary.total().graphs, 1 + 1 + 2 + 6 + 21 + 112) << id;
  }
}

TEST(Verify, SummaryCountsGeometries) {
  // connected chordal graphs: 1, 1, 2, 5, 15, 58
  const auto r = verify_theorem(find_theorem("T-MONO"), {.max_n = 6});
  std::vector<long> geometries;
  for (const LevelCounts& c : r.summary.levels) {
    geometries.push_back(c.geometries);
    EXPECT_EQ(c.geometries, c.members);
  }
  EXPECT_EQ(geometries, (std::vector<long>{1, 1, 2, 5, 15, 58}));
}

TEST(Verify, InvertedTheoremFailsWithReverifiableCertificates) {
  const auto r = verify_theorem(find_theorem("INV:T-MONO"), {.max_n = 5});
  ASSERT_EQ(r.certificates.size(), 1U + 1 + 2 + 6 + 21);
  for (const Certificate& c : r.certificates) {
    EXPECT_NE(c.geometry, c.member);
    EXPECT_TRUE(reverify(c)) << c.graph6;
  }
  Certificate forged = r.certificates.front();
  forged.geometry = !forged.geometry;
  EXPECT_FALSE(reverify(forged));
}

TEST(Verify, ParallelMatchesSerial) {
  for (std::string_view id : {"INV:T-GEO", "T-TOLL"}) {
    const Theorem t = find_theorem(id);
    const auto serial = verify_theorem(t, {.max_n = 6, .jobs = 1});
    const auto parallel = verify_theorem(t, {.max_n = 6, .jobs = 4});
    EXPECT_EQ(serial.certificates, parallel.certificates);
    EXPECT_EQ(to_json(serial.summary), to_json(parallel.summary));
  }
}

TEST(Verify, CertificatesRoundTripThroughJsonl) {
  const auto r = verify_theorem(find_theorem("INV:C-P4PLUS"), {.max_n = 5});
  ASSERT_FALSE(r.certificates.empty());
  const std::string text = to_jsonl(r.certificates);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), static_cast<long>(r.certificates.size()));
  EXPECT_EQ(certificates_from_jsonl(text), r.certificates);
  EXPECT_THROW(certificates_from_jsonl("{\"g6\": 3}\n"), InputError);
}

TEST(Verify, CustomGraphList) {
  const std::vector<Graph> graphs{Graph::cycle(4), Graph::cycle(5), Graph::path(4)};
  const auto r = verify_theorem(find_theorem("T-MONO"), {.graphs = &graphs});
  EXPECT_TRUE(r.certificates.empty());
  EXPECT_EQ(r.summary.total().graphs, 3);
  EXPECT_EQ(r.summary.total().geometries, 1);
}

TEST(Lemmas, HoldOnSmallGraphs) {
  for (const Lemma& l : lemma_registry()) {
    const auto r = verify_lemma(l, {.max_n = 5});
    EXPECT_TRUE(r.certificates.empty()) << l.id;
  }
}

TEST(Lemmas, DomainIsRespected) {
  const auto r = verify_lemma(find_lemma("L-TOLL-EXT-IFF"), {.max_n = 5});
  const LevelCounts total = r.summary.total();
  EXPECT_LT(total.members, total.graphs);
  EXPECT_EQ(total.geometries, total.members);
  const auto outside = find_lemma("L-TOLL-EXT-IFF").check(Graph::cycle(4), {});
  EXPECT_FALSE(outside.in_domain);
}

TEST(Fixtures, NonhereditaryExample) {
  const NonhereditaryReport r = nonhereditary_fixture_check();
  EXPECT_TRUE(r.full_is_geometry);
  EXPECT_FALSE(r.minus2_is_geometry);
  EXPECT_FALSE(r.minus5_is_geometry);
  EXPECT_EQ(r.minus2_extremes, (std::vector<int>{1, 7}));
  EXPECT_EQ(r.minus2_hull_of_1_7, (std::vector<int>{1, 7}));
  EXPECT_TRUE(r.ok());
}

TEST(Fixtures, MutatedExampleIsDetected) {
  const Graph fixture = patterns::l3_example().graph;
  std::vector<Edge> edges = fixture.edges();
  edges.push_back({0, 3});  // labels 1 and 4
  EXPECT_FALSE(nonhereditary_fixture_check(Graph::from_edge_list(7, edges)).ok());
}

TEST(Fixtures, Gem) {
  const GemReport r = gem_fixture_check();
  EXPECT_EQ(r.extremes, (std::vector<std::string>{"a", "d"}));
  EXPECT_EQ(r.hull_of_a_d, (std::vector<std::string>{"a", "d", "e"}));
  EXPECT_TRUE(r.ok());
}

TEST(Enumeration, SharedCacheServesPrefixes) {
  const auto& six = enumerated_graphs(6);
  const auto& four = enumerated_graphs(4);
  EXPECT_EQ(six.size(), 143U);
  EXPECT_EQ(four.size(), 10U);
  EXPECT_TRUE(std::equal(four.begin(), four.end(), six.begin()));
}

// Kuratowski subdivisions as induced patterns: planar graphs are always
// geometries, but nonplanar graphs with no induced subdivision are too.
TEST(Verify, PlanarFamilyDivergesOnlyOnNonplanarGeometries) {
  const auto r = verify_theorem(find_theorem("C-PLANAR"), {.max_n = 7});
  std::vector<long> per_level;
  for (const LevelCounts& l : r.summary.levels) per_level.push_back(l.certificates);
  EXPECT_EQ(per_level, (std::vector<long>{0, 0, 0, 0, 0, 6, 124}));
  for (const Certificate& c : r.certificates) {
    EXPECT_TRUE(c.geometry);
    EXPECT_FALSE(c.member);
  }
  EXPECT_EQ(r.certificates.front().graph6, "EFzg");  // K3,3 plus an edge
}
