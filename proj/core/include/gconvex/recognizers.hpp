#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gconvex/graph.hpp"

namespace gconvex {

// Graph-class recognition. Nothing here touches the convexity engine, so
// these procedures serve as the independent side of every characterization.

/// N[v] is a clique.
VertexSet simplicial_vertices(const Graph& g);
/// The closed neighbourhoods of the members of N[v] are totally ordered by inclusion.
VertexSet simple_vertices(const Graph& g);
/// v is never an internal vertex of an induced P4.
VertexSet semisimplicial_vertices(const Graph& g);

bool is_clique(const Graph& g, Mask s);

/// Greedy simplicial elimination.
bool is_chordal(const Graph& g);

/// Some induced cycle with at least min_length vertices, as a vertex sequence.
std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int min_length);

/// Chordal and every even cycle of length >= 6 has an odd chord, checked by
/// cycle search. Exponential; guarded by limits.
bool is_strongly_chordal(const Graph& g, const Limits& limits = {});
/// Farber's criterion: every non-empty induced subgraph has a simple vertex.
bool every_induced_subgraph_has_simple_vertex(const Graph& g, const Limits& limits = {});

/// Three vertices, each pair joined by a path avoiding the closed
/// neighbourhood of the third.
std::optional<std::array<Vertex, 3>> asteroidal_triple(const Graph& g);

std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Linear orders of the maximal cliques (indices into maximal_cliques(g))
/// in which the cliques containing any given vertex are consecutive. The
/// visitor returns false to stop early. Throws CapacityError for more than
/// limits.exponential_n cliques.
void for_each_consecutive_ordering(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit,
                                   const Limits& limits = {});
std::vector<std::vector<int>> consecutive_orderings(const Graph& g, const Limits& limits = {});

/// Simplicial vertices that some interval model places at an end, i.e. whose
/// maximal clique can open a consecutive clique ordering. Throws
/// PreconditionError for non-interval graphs.
VertexSet end_simplicial_vertices(const Graph& g, const Limits& limits = {});

struct NGem {
  std::vector<Vertex> path;  // x0..xn, n >= 4
  Vertex apex;
};

/// Induced n-gems (n >= 4): an induced path on at least five vertices inside
/// the neighbourhood of the apex. Each is reported once, with path.front() < path.back().
std::vector<NGem> n_gems(const Graph& g);
/// An induced P4 joins x0 and xn without using the apex.
bool is_solved(const Graph& g, const NGem& gem);

/// No subgraph is a subdivision of K5 or K3,3; exhaustive branch-vertex and
/// disjoint-path search.
bool is_planar_desk(const Graph& g, const Limits& limits = {});

enum class GraphClass {
  chordal,
  ptolemaic,
  strongly_chordal,
  weakly_polarizable,
  interval,
  proper_interval,
  cograph,
  chordal_cograph,
  forest,
  forest_of_stars,
  bipartite,
  planar_desk,
  l3_characterization,
  diam_at_most,
};

struct ClassSpec {
  GraphClass kind;
  int k = 0;  // diam_at_most only

  std::string name() const;
};

/// chordal, ptolemaic, strongly-chordal, weakly-polarizable, interval,
/// proper-interval, cograph, chordal-cograph, forest, forest-of-stars,
/// bipartite, planar, l3-characterization, diam:<k>.
ClassSpec parse_class(std::string_view name);

bool recognize(const Graph& g, const ClassSpec& c, const Limits& limits = {});

}  // namespace gconvex
