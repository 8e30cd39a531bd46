#pragma once

#include <array>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "gconvex/vertex_set.hpp"

namespace gconvex {

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Limits for operations whose running time is exponential in the vertex count.
struct Limits {
  int exponential_n = 12;
};

void require_within(int n, const Limits& limits, const char* what);

/// Immutable simple undirected graph on vertices 0..n-1, n <= 32.
///
/// Adjacency is kept as one bit row per vertex. The relation is symmetric and
/// irreflexive by construction; connectivity is not required.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops and out-of-range endpoints. Repeated
  /// pairs collapse to a single edge.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must already be symmetric with a zero diagonal.
  static Graph from_rows(int n, std::span<const Mask> rows);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int leaves);
  static Graph complete_bipartite(int a, int b);

  int order() const noexcept { return n_; }
  int edge_count() const noexcept;

  bool adjacent(Vertex u, Vertex v) const noexcept { return (adj_[u] & bit(v)) != 0; }
  Mask row(Vertex v) const noexcept { return adj_[v]; }
  Mask closed_row(Vertex v) const noexcept { return adj_[v] | bit(v); }
  int degree(Vertex v) const noexcept;

  VertexSet vertices() const { return VertexSet::all(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(n_, adj_[v]); }
  VertexSet closed_neighbors(Vertex v) const { return VertexSet(n_, closed_row(v)); }

  std::vector<Edge> edges() const;

  /// Vertex i of the result is vertex order[i] of this graph.
  Graph permuted(std::span<const Vertex> order) const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::array<Mask, kMaxVertices> adj_{};
};

struct InducedSubgraph {
  Graph graph;
  /// to_original[i] is the vertex of the parent graph that became vertex i.
  std::vector<Vertex> to_original;

  VertexSet lift(const VertexSet& local, int parent_order) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Adjacency matrix of G[s] packed into a Graph without the mapping.
Graph induced(const Graph& g, Mask s);

inline constexpr int kInfinity = std::numeric_limits<int>::max();

class DistanceTable {
 public:
  explicit DistanceTable(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kInfinity) {}

  int order() const noexcept { return n_; }
  int at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  int& at(Vertex u, Vertex v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  int n_;
  std::vector<int> d_;
};

/// All-pairs BFS distances; kInfinity across components.
DistanceTable distances(const Graph& g);

/// Largest finite distance, or kInfinity when g is disconnected. 0 for n <= 1.
int diameter(const Graph& g);

/// Vertices reachable from source using only vertices of `within` (source is
/// always included, even if outside `within`).
Mask reach(const Graph& g, Vertex source, Mask within);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

}  // namespace gconvex
