#pragma once

#include <vector>

#include "gconvex/convexity.hpp"
#include "gconvex/graph.hpp"

namespace gconvex {

/// I(u, v): u, v and every vertex on a qualifying walk between them.
/// I(u, u) = {u}. Throws UnsupportedOracleError for f_free and p4_plus.
VertexSet interval(const Graph& g, const ConvexitySpec& c, Vertex u, Vertex v);

/// Union of I(u, v) over all pairs of s (including u == v).
VertexSet interval_of_set(const Graph& g, const ConvexitySpec& c, const VertexSet& s);

/// Does x lie on a tolled walk from u to v (u != v)?
///
/// Decided from reachability in G - N[u] - N[v]; no walk is enumerated.
bool toll_membership(const Graph& g, Vertex u, Vertex v, Vertex x);

/// Does x lie on a weakly toll walk from u to v (u != v)?
bool weakly_toll_membership(const Graph& g, Vertex u, Vertex v, Vertex x);

/// The whole toll / weakly toll interval of (u, v) at once.
VertexSet toll_interval(const Graph& g, Vertex u, Vertex v);
VertexSet weakly_toll_interval(const Graph& g, Vertex u, Vertex v);

enum class WalkKind { toll, weakly_toll };

/// Validation oracle: breadth-first search over walk states that encode the
/// walk definitions literally, limited to walks of at most max_len edges
/// (0 selects the default 2n + 2). True iff such a walk from u to v visits x.
bool bounded_walk_oracle(const Graph& g, WalkKind kind, Vertex u, Vertex v, Vertex x, int max_len = 0);

/// Every x for which bounded_walk_oracle would answer true.
VertexSet bounded_walk_interval(const Graph& g, WalkKind kind, Vertex u, Vertex v, int max_len = 0);

/// I(u, v) for every pair, computed once per graph.
class IntervalTable {
 public:
  static IntervalTable build(const Graph& g, const ConvexitySpec& c);

  int order() const noexcept { return n_; }
  Mask at(Vertex u, Vertex v) const { return cells_[static_cast<std::size_t>(u) * n_ + v]; }
  VertexSet interval(Vertex u, Vertex v) const { return VertexSet(n_, at(u, v)); }

 private:
  explicit IntervalTable(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {}
  Mask& cell(Vertex u, Vertex v) { return cells_[static_cast<std::size_t>(u) * n_ + v]; }

  int n_;
  std::vector<Mask> cells_;
};

}  // namespace gconvex
