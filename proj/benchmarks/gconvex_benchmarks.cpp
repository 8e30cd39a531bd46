#include <benchmark/benchmark.h>

#include <random>

#include "gconvex/canonical.hpp"
#include "gconvex/engine.hpp"
#include "gconvex/enumerate.hpp"
#include "gconvex/graph_io.hpp"
#include "gconvex/harness.hpp"
#include "gconvex/recognizers.hpp"
#include "gconvex/walks.hpp"

using namespace gconvex;

namespace {

Graph random_connected(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  std::sort(edges.begin(), edges.end(), [](Edge a, Edge b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edge_list(n, edges);
}

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 0.4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g, Limits{24}));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(emit_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(8)->Arg(32);

void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(connected_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateConnected)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_IntervalTable(benchmark::State& state, const char* convexity) {
  const ConvexitySpec c = parse_convexity(convexity);
  const Graph g = random_connected(static_cast<int>(state.range(0)), 0.3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(IntervalTable::build(g, c));
}
BENCHMARK_CAPTURE(BM_IntervalTable, geodetic, "geodetic")->Arg(8)->Arg(16);
BENCHMARK_CAPTURE(BM_IntervalTable, monophonic, "monophonic")->Arg(8)->Arg(12);
BENCHMARK_CAPTURE(BM_IntervalTable, toll, "toll")->Arg(8)->Arg(16);
BENCHMARK_CAPTURE(BM_IntervalTable, weakly_toll, "weakly-toll")->Arg(8)->Arg(16);
BENCHMARK_CAPTURE(BM_IntervalTable, l3, "l3")->Arg(8)->Arg(12);

void BM_BoundedWalkOracle(benchmark::State& state) {
  const Graph g = random_connected(7, 0.35, 5);
  const auto kind = state.range(0) == 0 ? WalkKind::toll : WalkKind::weakly_toll;
  for (auto _ : state) benchmark::DoNotOptimize(bounded_walk_interval(g, kind, 0, 6));
}
BENCHMARK(BM_BoundedWalkOracle)->Arg(0)->Arg(1);

void BM_Hull(benchmark::State& state) {
  const Graph g = random_connected(16, 0.25, 9);
  const ClosureSystem closure(g, ConvexitySpec::monophonic());
  for (auto _ : state) benchmark::DoNotOptimize(closure.hull(VertexSet::of(16, {0, 15})));
}
BENCHMARK(BM_Hull);

void BM_GeometryMkm(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 0.5, 13);
  const ClosureSystem closure(g, ConvexitySpec::geodetic());
  for (auto _ : state) benchmark::DoNotOptimize(is_convex_geometry_mkm(closure));
}
BENCHMARK(BM_GeometryMkm)->Arg(8)->Arg(10)->Arg(12);

void BM_Recognize(benchmark::State& state, const char* cls) {
  const ClassSpec c = parse_class(cls);
  const Graph g = random_connected(10, 0.4, 17);
  for (auto _ : state) benchmark::DoNotOptimize(recognize(g, c));
}
BENCHMARK_CAPTURE(BM_Recognize, chordal, "chordal");
BENCHMARK_CAPTURE(BM_Recognize, strongly_chordal, "strongly-chordal");
BENCHMARK_CAPTURE(BM_Recognize, interval, "interval");
BENCHMARK_CAPTURE(BM_Recognize, planar, "planar");

void BM_VerifyTheorem(benchmark::State& state) {
  const Theorem t = find_theorem("T-MONO");
  enumerated_graphs(7);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(t, {.max_n = static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_VerifyTheorem)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
