#include "gconvex/recognizers.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "gconvex/paths.hpp"
#include "gconvex/patterns.hpp"

namespace gconvex {

bool is_clique(const Graph& g, Mask s) {
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    const Vertex v = std::countr_zero(rest);
    if ((s & ~g.closed_row(v)) != 0) return false;
  }
  return true;
}

VertexSet simplicial_vertices(const Graph& g) {
  Mask out = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_clique(g, g.closed_row(v))) out |= bit(v);
  return VertexSet(g.order(), out);
}

VertexSet simple_vertices(const Graph& g) {
  Mask out = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    bool nested = true;
    const Mask around = g.closed_row(v);
    for (Mask a = around; a != 0 && nested; a &= a - 1) {
      const Mask na = g.closed_row(std::countr_zero(a));
      for (Mask b = a & (a - 1); b != 0 && nested; b &= b - 1) {
        const Mask nb = g.closed_row(std::countr_zero(b));
        nested = (na & ~nb) == 0 || (nb & ~na) == 0;
      }
    }
    if (nested) out |= bit(v);
  }
  return VertexSet(g.order(), out);
}

VertexSet semisimplicial_vertices(const Graph& g) {
  Mask internal = 0;
  for (Vertex a = 0; a < g.order(); ++a) {
    for_each_path_from(g, a, PathRule::induced(), {3, 3},
                       [&](std::span<const Vertex> p) { internal |= bit(p[1]) | bit(p[2]); });
  }
  return VertexSet(g.order(), full_mask(g.order()) & ~internal);
}

bool is_chordal(const Graph& g) {
  Mask left = full_mask(g.order());
  while (left != 0) {
    bool removed = false;
    for (Mask rest = left; rest != 0; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      if (is_clique(g, g.closed_row(v) & left)) {
        left &= ~bit(v);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

namespace {

// Induced cycles through their smallest vertex s: an induced path from s
// whose last vertex is the only one besides the second that touches s.
struct CycleSearch {
  const Graph& g;
  int min_length;
  std::vector<Vertex> path;
  Mask on_path = 0;

  bool extend(Vertex s) {
    const Vertex last = path.back();
    for (Mask next = g.row(last) & ~on_path & ~full_mask(s + 1); next != 0; next &= next - 1) {
      const Vertex w = std::countr_zero(next);
      const Mask chords = g.row(w) & on_path & ~bit(last);
      if (chords == bit(s)) {
        if (static_cast<int>(path.size()) + 1 >= min_length) {
          path.push_back(w);
          return true;
        }
        continue;
      }
      if (chords != 0) continue;
      path.push_back(w);
      on_path |= bit(w);
      if (extend(s)) return true;
      on_path &= ~bit(w);
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int min_length) {
  for (Vertex s = 0; s < g.order(); ++s) {
    CycleSearch search{g, std::max(min_length, 3), {s}, bit(s)};
    if (search.extend(s)) return search.path;
  }
  return std::nullopt;
}

namespace {

// Even cycles of length >= 6 without an odd chord, through their smallest vertex.
struct EvenCycleSearch {
  const Graph& g;
  std::vector<Vertex> path;
  Mask on_path = 0;
  std::array<Mask, 2> parity{};  // path vertices by position parity

  bool extend(Vertex s) {
    const int j = static_cast<int>(path.size());  // position of the next vertex
    const Vertex last = path.back();
    for (Mask next = g.row(last) & ~on_path & ~full_mask(s + 1); next != 0; next &= next - 1) {
      const Vertex w = std::countr_zero(next);
      const Mask chords = g.row(w) & on_path & ~bit(last);
      const bool closes = (chords & bit(s)) != 0 && (j & 1) == 1;
      // chords to positions at odd distance, other than the closing edge to s
      const Mask odd = chords & parity[(j + 1) & 1] & ~(closes ? bit(s) : Mask{0});
      if (odd != 0) continue;
      if (closes) {
        if (j + 1 >= 6) return true;
        continue;
      }
      path.push_back(w);
      on_path |= bit(w);
      parity[j & 1] |= bit(w);
      if (extend(s)) return true;
      parity[j & 1] &= ~bit(w);
      on_path &= ~bit(w);
      path.pop_back();
    }
    return false;
  }
};

bool has_even_cycle_without_odd_chord(const Graph& g) {
  for (Vertex s = 0; s < g.order(); ++s) {
    EvenCycleSearch search{g, {s}, bit(s), {bit(s), 0}};
    if (search.extend(s)) return true;
  }
  return false;
}

}  // namespace

bool is_strongly_chordal(const Graph& g, const Limits& limits) {
  require_within(g.order(), limits, "strongly chordal recognition");
  return is_chordal(g) && !has_even_cycle_without_odd_chord(g);
}

bool every_induced_subgraph_has_simple_vertex(const Graph& g, const Limits& limits) {
  require_within(g.order(), limits, "simple vertex criterion");
  const std::size_t total = std::size_t{1} << g.order();
  for (std::size_t s = 1; s < total; ++s) {
    if (simple_vertices(induced(g, static_cast<Mask>(s))).empty()) return false;
  }
  return true;
}

std::optional<std::array<Vertex, 3>> asteroidal_triple(const Graph& g) {
  const int n = g.order();
  const Mask all = full_mask(n);
  auto joined_avoiding = [&](Vertex a, Vertex b, Vertex c) {
    const Mask allowed = all & ~g.closed_row(c);
    if (!(allowed & bit(a)) || !(allowed & bit(b))) return false;
    return (reach(g, a, allowed) & bit(b)) != 0;
  };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (joined_avoiding(a, b, c) && joined_avoiding(a, c, b) && joined_avoiding(b, c, a)) {
          return std::array<Vertex, 3>{a, b, c};
        }
  return std::nullopt;
}

namespace {

void bron_kerbosch(const Graph& g, Mask r, Mask p, Mask x, std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.emplace_back(g.order(), r);
    return;
  }
  const Vertex pivot = std::countr_zero(p | x);
  for (Mask cand = p & ~g.row(pivot); cand != 0; cand &= cand - 1) {
    const Vertex v = std::countr_zero(cand);
    bron_kerbosch(g, r | bit(v), p & g.row(v), x & g.row(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  bron_kerbosch(g, 0, full_mask(g.order()), 0, out);
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.bits() < b.bits(); });
  return out;
}

namespace {

struct OrderingSearch {
  const std::vector<VertexSet>& cliques;
  const std::function<bool(const std::vector<int>&)>& visit;
  std::vector<int> order;
  std::vector<char> used;

  // seen: vertices of cliques placed so far; last: the most recent clique.
  bool place(Mask seen, Mask last) {
    if (order.size() == cliques.size()) return visit(order);
    const Mask closed = seen & ~last;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      if (used[i]) continue;
      const Mask c = cliques[i].bits();
      if (c & closed) continue;
      used[i] = 1;
      order.push_back(static_cast<int>(i));
      const bool go_on = place(seen | c, c);
      order.pop_back();
      used[i] = 0;
      if (!go_on) return false;
    }
    return true;
  }
};

bool interval_graph(const Graph& g) { return is_chordal(g) && !asteroidal_triple(g); }

}  // namespace

void for_each_consecutive_ordering(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit,
                                   const Limits& limits) {
  const auto cliques = maximal_cliques(g);
  if (static_cast<int>(cliques.size()) > limits.exponential_n) {
    throw CapacityError("consecutive clique orderings: " + std::to_string(cliques.size()) +
                        " maximal cliques exceeds the guard of " + std::to_string(limits.exponential_n));
  }
  OrderingSearch search{cliques, visit, {}, std::vector<char>(cliques.size(), 0)};
  search.place(0, 0);
}

std::vector<std::vector<int>> consecutive_orderings(const Graph& g, const Limits& limits) {
  std::vector<std::vector<int>> out;
  for_each_consecutive_ordering(
      g,
      [&](const std::vector<int>& o) {
        out.push_back(o);
        return true;
      },
      limits);
  return out;
}

VertexSet end_simplicial_vertices(const Graph& g, const Limits& limits) {
  if (!interval_graph(g)) throw PreconditionError("end simplicial vertices need an interval graph");
  const auto cliques = maximal_cliques(g);
  if (static_cast<int>(cliques.size()) > limits.exponential_n) {
    throw CapacityError("end simplicial vertices: too many maximal cliques");
  }
  // Cliques that can open some consecutive ordering (by reversal, also close one).
  std::vector<char> opener(cliques.size(), 0);
  for (std::size_t first = 0; first < cliques.size(); ++first) {
    std::vector<char> used(cliques.size(), 0);
    used[first] = 1;
    bool found = false;
    const std::function<bool(const std::vector<int>&)> stop = [&](const std::vector<int>&) {
      found = true;
      return false;
    };
    OrderingSearch search{cliques, stop, {static_cast<int>(first)}, used};
    search.place(cliques[first].bits(), cliques[first].bits());
    opener[first] = found;
  }
  Mask out = 0;
  for (Vertex v : simplicial_vertices(g)) {
    for (std::size_t i = 0; i < cliques.size(); ++i)
      if (opener[i] && cliques[i].contains(v)) out |= bit(v);
  }
  return VertexSet(g.order(), out);
}

std::vector<NGem> n_gems(const Graph& g) {
  std::vector<NGem> out;
  for (Vertex apex = 0; apex < g.order(); ++apex) {
    const auto local = induced_subgraph(g, g.neighbors(apex));
    for (Vertex a = 0; a < local.graph.order(); ++a) {
      for_each_path_from(local.graph, a, PathRule::induced(), {4, kMaxVertices}, [&](std::span<const Vertex> p) {
        if (p.front() > p.back()) return;
        NGem gem{{}, apex};
        for (Vertex v : p) gem.path.push_back(local.to_original[v]);
        out.push_back(std::move(gem));
      });
    }
  }
  return out;
}

bool is_solved(const Graph& g, const NGem& gem) {
  bool solved = false;
  for_each_path(g, gem.path.front(), gem.path.back(), PathRule::induced(), {3, 3}, [&](std::span<const Vertex> p) {
    if (std::find(p.begin(), p.end(), gem.apex) == p.end()) solved = true;
  });
  return solved;
}

namespace {

// Routes the edges of a Kuratowski graph through internally disjoint paths.
struct SubdivisionRouter {
  const Graph& g;
  std::vector<std::pair<Vertex, Vertex>> links;  // branch vertex pairs to connect
  Mask free = 0;                                  // vertices usable as path interiors

  bool route(std::size_t i) {
    if (i == links.size()) return true;
    const auto [a, b] = links[i];
    if (g.adjacent(a, b) && route(i + 1)) return true;
    return walk(i, a, b);
  }

  // Extends a path from `at` towards b through free vertices, which are
  // withdrawn from `free` while the path holds them.
  bool walk(std::size_t i, Vertex at, Vertex b) {
    for (Mask next = g.row(at) & free; next != 0; next &= next - 1) {
      const Vertex w = std::countr_zero(next);
      free &= ~bit(w);
      const bool done = (g.adjacent(w, b) && route(i + 1)) || walk(i, w, b);
      free |= bit(w);
      if (done) return true;
    }
    return false;
  }
};

bool contains_subdivision(const Graph& g, const std::vector<Vertex>& branch,
                          const std::vector<std::pair<int, int>>& base_edges) {
  Mask branches = 0;
  for (Vertex v : branch) branches |= bit(v);
  SubdivisionRouter router{g, {}, full_mask(g.order()) & ~branches};
  for (auto [p, q] : base_edges) router.links.emplace_back(branch[p], branch[q]);
  return router.route(0);
}

bool has_k5_subdivision(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
  const int n = g.order();
  for (Mask s = full_mask(5); s != 0 && s <= full_mask(n);) {
    std::vector<Vertex> branch;
    bool degrees_ok = true;
    for (Mask r = s; r != 0; r &= r - 1) {
      branch.push_back(std::countr_zero(r));
      degrees_ok = degrees_ok && g.degree(branch.back()) >= 4;
    }
    if (degrees_ok && contains_subdivision(g, branch, edges)) return true;
    const Mask low = s & (~s + 1);
    const Mask ripple = s + low;
    if (ripple == 0) break;
    s = ripple | (((s ^ ripple) >> 2) / low);
  }
  return false;
}

bool has_k33_subdivision(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) edges.emplace_back(i, j);
  const int n = g.order();
  std::vector<Vertex> eligible;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) >= 3) eligible.push_back(v);
  const int m = static_cast<int>(eligible.size());
  // side A holds the smallest chosen vertex, so each unordered pair of sides is tried once
  for (int a0 = 0; a0 < m; ++a0)
    for (int a1 = a0 + 1; a1 < m; ++a1)
      for (int a2 = a1 + 1; a2 < m; ++a2)
        for (int b0 = a0 + 1; b0 < m; ++b0) {
          if (b0 == a1 || b0 == a2) continue;
          for (int b1 = b0 + 1; b1 < m; ++b1) {
            if (b1 == a1 || b1 == a2) continue;
            for (int b2 = b1 + 1; b2 < m; ++b2) {
              if (b2 == a1 || b2 == a2) continue;
              const std::vector<Vertex> branch{eligible[a0], eligible[a1], eligible[a2],
                                               eligible[b0], eligible[b1], eligible[b2]};
              if (contains_subdivision(g, branch, edges)) return true;
            }
          }
        }
  return false;
}

}  // namespace

bool is_planar_desk(const Graph& g, const Limits& limits) {
  require_within(g.order(), limits, "planarity search");
  return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

std::string ClassSpec::name() const {
  switch (kind) {
    case GraphClass::chordal: return "chordal";
    case GraphClass::ptolemaic: return "ptolemaic";
    case GraphClass::strongly_chordal: return "strongly-chordal";
    case GraphClass::weakly_polarizable: return "weakly-polarizable";
    case GraphClass::interval: return "interval";
    case GraphClass::proper_interval: return "proper-interval";
    case GraphClass::cograph: return "cograph";
    case GraphClass::chordal_cograph: return "chordal-cograph";
    case GraphClass::forest: return "forest";
    case GraphClass::forest_of_stars: return "forest-of-stars";
    case GraphClass::bipartite: return "bipartite";
    case GraphClass::planar_desk: return "planar";
    case GraphClass::l3_characterization: return "l3-characterization";
    case GraphClass::diam_at_most: return "diam:" + std::to_string(k);
  }
  return "?";
}

ClassSpec parse_class(std::string_view name) {
  static const std::pair<std::string_view, GraphClass> kNames[] = {
      {"chordal", GraphClass::chordal},
      {"ptolemaic", GraphClass::ptolemaic},
      {"strongly-chordal", GraphClass::strongly_chordal},
      {"weakly-polarizable", GraphClass::weakly_polarizable},
      {"interval", GraphClass::interval},
      {"proper-interval", GraphClass::proper_interval},
      {"cograph", GraphClass::cograph},
      {"chordal-cograph", GraphClass::chordal_cograph},
      {"forest", GraphClass::forest},
      {"forest-of-stars", GraphClass::forest_of_stars},
      {"bipartite", GraphClass::bipartite},
      {"planar", GraphClass::planar_desk},
      {"l3-characterization", GraphClass::l3_characterization},
  };
  for (auto [text, kind] : kNames)
    if (name == text) return {kind};
  if (name.starts_with("diam:")) {
    int k = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 5, name.data() + name.size(), k);
    if (ec == std::errc{} && ptr == name.data() + name.size() && k >= 0) return {GraphClass::diam_at_most, k};
  }
  throw InputError("unknown graph class '" + std::string(name) + "'");
}

namespace {

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Mask r = g.row(v); r != 0; r &= r - 1) {
        const Vertex w = std::countr_zero(r);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_forest(const Graph& g) {
  return g.edge_count() == g.order() - static_cast<int>(components(g).size());
}

bool is_forest_of_stars(const Graph& g) {
  if (!is_forest(g)) return false;
  for (const VertexSet& c : components(g)) {
    if (c.size() <= 2) continue;
    bool has_center = false;
    for (Vertex v : c) has_center = has_center || (g.closed_row(v) & c.bits()) == c.bits();
    if (!has_center) return false;
  }
  return true;
}

bool is_cograph(const Graph& g) { return !contains_induced(g, Graph::path(4)).has_value(); }

bool all_gems_solved(const Graph& g) {
  for (const NGem& gem : n_gems(g))
    if (!is_solved(g, gem)) return false;
  return true;
}

}  // namespace

bool recognize(const Graph& g, const ClassSpec& c, const Limits& limits) {
  switch (c.kind) {
    case GraphClass::chordal:
      return is_chordal(g);
    case GraphClass::ptolemaic:
      return is_chordal(g) && !contains_induced(g, patterns::gem()).has_value();
    case GraphClass::strongly_chordal:
      return is_strongly_chordal(g, limits);
    case GraphClass::weakly_polarizable:
      return !find_induced_cycle(g, 5) && !contains_induced(g, patterns::house()) &&
             !contains_induced(g, patterns::domino()) && !contains_induced(g, patterns::letter_a());
    case GraphClass::interval:
      return interval_graph(g);
    case GraphClass::proper_interval:
      return interval_graph(g) && !contains_induced(g, patterns::claw());
    case GraphClass::cograph:
      return is_cograph(g);
    case GraphClass::chordal_cograph:
      return is_chordal(g) && is_cograph(g);
    case GraphClass::forest:
      return is_forest(g);
    case GraphClass::forest_of_stars:
      return is_forest_of_stars(g);
    case GraphClass::bipartite:
      return is_bipartite(g);
    case GraphClass::planar_desk:
      return is_planar_desk(g, limits);
    case GraphClass::l3_characterization:
      return is_chordal(g) && diameter(g) <= 3 && all_gems_solved(g);
    case GraphClass::diam_at_most:
      return diameter(g) <= c.k;
  }
  return false;
}

}  // namespace gconvex
