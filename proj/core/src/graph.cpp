#include "gconvex/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace gconvex {

void require_within(int n, const Limits& limits, const char* what) {
  if (n > limits.exponential_n) {
    throw CapacityError(std::string(what) + ": " + std::to_string(n) +
                        " vertices exceeds the exponential guard of " +
                        std::to_string(limits.exponential_n));
  }
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("graph order " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    }
    g.adj_[e.u] |= bit(e.v);
    g.adj_[e.v] |= bit(e.u);
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const Mask> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw InputError("expected " + std::to_string(n) + " adjacency rows");
  }
  Graph g;
  g.n_ = n;
  for (int v = 0; v < n; ++v) {
    Mask r = rows[v];
    if ((r & ~full_mask(n)) != 0 || (r & bit(v)) != 0) {
      throw InputError("adjacency row " + std::to_string(v) + " is invalid");
    }
    g.adj_[v] = r;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) {
        throw InputError("adjacency rows are not symmetric");
      }
    }
  }
  return g;
}

Graph Graph::complete(int n) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (int v = 0; v < n; ++v) g.adj_[v] = full_mask(n) & ~bit(v);
  return g;
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  return from_edge_list(n, es);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
  return from_edge_list(n, es);
}

Graph Graph::star(int leaves) {
  std::vector<Edge> es;
  for (int v = 1; v <= leaves; ++v) es.push_back({0, v});
  return from_edge_list(leaves + 1, es);
}

Graph Graph::complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) es.push_back({u, v});
  return from_edge_list(a + b, es);
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

int Graph::degree(Vertex v) const noexcept { return std::popcount(adj_[v]); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.push_back({u, v});
  return out;
}

Graph Graph::permuted(std::span<const Vertex> order) const {
  if (order.size() != static_cast<std::size_t>(n_)) {
    throw InputError("permutation size does not match graph order");
  }
  Graph g;
  g.n_ = n_;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && adjacent(order[i], order[j])) g.adj_[i] |= bit(j);
  return g;
}

Graph Graph::complement() const {
  Graph g;
  g.n_ = n_;
  for (int v = 0; v < n_; ++v) g.adj_[v] = ~adj_[v] & full_mask(n_) & ~bit(v);
  return g;
}

VertexSet InducedSubgraph::lift(const VertexSet& local, int parent_order) const {
  Mask m = 0;
  for (Vertex v : local) m |= bit(to_original[v]);
  return VertexSet(parent_order, m);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw InputError("vertex set does not index this graph");
  }
  InducedSubgraph out;
  out.to_original = s.to_vector();
  out.graph = induced(g, s.bits());
  return out;
}

Graph induced(const Graph& g, Mask s) {
  std::array<Vertex, kMaxVertices> members{};
  int k = 0;
  for (Mask rest = s; rest != 0; rest &= rest - 1) members[k++] = std::countr_zero(rest);
  std::array<Mask, kMaxVertices> rows{};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(members[i], members[j])) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
  return Graph::from_rows(k, std::span<const Mask>(rows.data(), k));
}

DistanceTable distances(const Graph& g) {
  const int n = g.order();
  DistanceTable table(n);
  for (Vertex s = 0; s < n; ++s) {
    Mask seen = bit(s);
    Mask frontier = bit(s);
    int level = 0;
    while (frontier != 0) {
      for (Mask f = frontier; f != 0; f &= f - 1) table.at(s, std::countr_zero(f)) = level;
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= g.row(std::countr_zero(f));
      next &= ~seen;
      seen |= next;
      frontier = next;
      ++level;
    }
  }
  return table;
}

int diameter(const Graph& g) {
  const DistanceTable d = distances(g);
  int best = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) best = std::max(best, d.at(u, v));
  return best;
}

Mask reach(const Graph& g, Vertex source, Mask within) {
  Mask seen = bit(source);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= g.row(std::countr_zero(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return reach(g, 0, full_mask(g.order())) == full_mask(g.order());
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  Mask left = full_mask(g.order());
  while (left != 0) {
    Mask c = reach(g, std::countr_zero(left), left);
    out.emplace_back(g.order(), c);
    left &= ~c;
  }
  return out;
}

}  // namespace gconvex
