#include "gconvex/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace gconvex {

namespace {

using Partition = std::vector<Mask>;  // ordered cells

std::string adjacency_bits(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  std::string out((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(order[i], order[j])) out[k / 8] = static_cast<char>(out[k / 8] | (0x80 >> (k % 8)));
  return out;
}

// Splits cells by the vector of neighbour counts into every cell until stable.
void refine(const Graph& g, Partition& cells) {
  const int n = g.order();
  for (;;) {
    Partition next;
    next.reserve(n);
    std::array<std::array<int, kMaxVertices>, kMaxVertices> keys{};
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t c = 0; c < cells.size(); ++c) keys[v][c] = std::popcount(g.row(v) & cells[c]);

    const std::size_t width = cells.size();
    auto less = [&](Vertex a, Vertex b) {
      return std::lexicographical_compare(keys[a].begin(), keys[a].begin() + width, keys[b].begin(),
                                          keys[b].begin() + width);
    };
    auto same = [&](Vertex a, Vertex b) {
      return std::equal(keys[a].begin(), keys[a].begin() + width, keys[b].begin());
    };

    for (Mask cell : cells) {
      if (std::popcount(cell) == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<Vertex> members;
      for (Mask m = cell; m != 0; m &= m - 1) members.push_back(std::countr_zero(m));
      std::sort(members.begin(), members.end(), less);
      Mask current = bit(members[0]);
      for (std::size_t i = 1; i < members.size(); ++i) {
        if (same(members[i - 1], members[i])) {
          current |= bit(members[i]);
        } else {
          next.push_back(current);
          current = bit(members[i]);
        }
      }
      next.push_back(current);
    }
    if (next.size() == cells.size()) return;
    cells = std::move(next);
  }
}

bool twins(const Graph& g, Vertex a, Vertex b) {
  return (g.row(a) & ~bit(b)) == (g.row(b) & ~bit(a));
}

struct Search {
  const Graph& g;
  std::string best;
  std::vector<Vertex> best_order;
  bool have = false;

  void run(Partition cells) {
    refine(g, cells);
    auto open = std::find_if(cells.begin(), cells.end(), [](Mask c) { return std::popcount(c) > 1; });
    if (open == cells.end()) {
      std::vector<Vertex> order;
      order.reserve(cells.size());
      for (Mask c : cells) order.push_back(std::countr_zero(c));
      std::string cert = adjacency_bits(g, order);
      if (!have || cert > best) {
        best = std::move(cert);
        best_order = std::move(order);
        have = true;
      }
      return;
    }
    const std::size_t at = static_cast<std::size_t>(open - cells.begin());
    const Mask cell = *open;
    std::vector<Vertex> tried;
    for (Mask m = cell; m != 0; m &= m - 1) {
      const Vertex v = std::countr_zero(m);
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); })) continue;
      tried.push_back(v);
      Partition child = cells;
      child[at] = bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(at) + 1, cell & ~bit(v));
      run(std::move(child));
    }
  }
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g, const Limits& limits) {
  require_within(g.order(), limits, "canonical form");
  if (g.order() == 0) return {};
  Search search{g, {}, {}, false};
  search.run(Partition{full_mask(g.order())});
  return search.best_order;
}

std::string canonical_form(const Graph& g, const Limits& limits) {
  const auto order = canonical_labeling(g, limits);
  return std::string(1, static_cast<char>(g.order())) + adjacency_bits(g, order);
}

Graph canonical_graph(const Graph& g, const Limits& limits) {
  return g.permuted(canonical_labeling(g, limits));
}

bool isomorphic(const Graph& a, const Graph& b, const Limits& limits) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, limits) == canonical_form(b, limits);
}

}  // namespace gconvex
