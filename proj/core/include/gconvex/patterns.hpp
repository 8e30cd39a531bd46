#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gconvex/graph.hpp"

namespace gconvex {

/// A small named graph used as an induced-subgraph pattern.
struct PatternGraph {
  std::string name;
  Graph graph;
  /// labels[i] names vertex i in the documented drawing (a, b, c, ...).
  std::vector<std::string> labels;

  Vertex vertex(std::string_view label) const;
};

namespace patterns {

/// Path a-b-c-d plus e adjacent to all four. Vertices a..e are 0..4.
PatternGraph gem();
/// Edges ab, bc, cd, ad, ae, be.
PatternGraph house();
/// Edges ab, bc, cd, ad, ce, ef, df.
PatternGraph domino();
/// The domino without ef.
PatternGraph letter_a();
/// Center a with leaves b, c, d.
PatternGraph claw();
PatternGraph cycle(int k);
PatternGraph path(int k);
PatternGraph complete(int k);
PatternGraph complete_bipartite(int a, int b);
/// Induced path x0..xn (vertices 0..n) plus apex n+1 adjacent to all of them.
PatternGraph n_gem(int n);

/// The seven-vertex graph of the non-hereditary l3 example. Vertex i is the
/// drawing's label i+1; edges 1-3, 3-4, 4-6, 6-7, 5-7, 5-6, 2-4, 2-5, 4-5, 2-3, 1-2
/// (the triangle 2-4-5 sits above the middle vertex 4).
PatternGraph l3_example();

/// Odd cycles C3, C5, ... with at most max_order vertices.
std::vector<PatternGraph> odd_cycles(int max_order);

/// Every graph obtained from K5 or K3,3 by subdividing edges, up to
/// max_order vertices, one per isomorphism class.
std::vector<PatternGraph> kuratowski_subdivisions(int max_order);

/// Looks up "gem", "house", "domino", "A", "claw", "K1,3", "C5", "P4",
/// "K3", "K3,3", "4-gem"... Throws InputError for unknown names.
PatternGraph by_name(std::string_view name);

/// Checks every fixed pattern against its documented edge list and the
/// structural facts that define it. Returns a list of problems (empty = ok).
std::vector<std::string> check_library();

}  // namespace patterns

/// Injective map from pattern vertices into g preserving adjacency and
/// non-adjacency, or nullopt. embedding[i] is the image of pattern vertex i.
std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& pattern);
inline std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const PatternGraph& p) {
  return contains_induced(g, p.graph);
}

/// All vertex subsets T of g with G[T] isomorphic to pattern.
std::vector<Mask> induced_occurrences(const Graph& g, const Graph& pattern, const Limits& limits = {});

}  // namespace gconvex
