#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace oracle {

using gconvex::Edge;

std::vector<Graph> all_labelled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m >> k & 1) es.push_back({pairs[k].first, pairs[k].second});
    out.push_back(Graph::from_edge_list(n, es));
  }
  return out;
}

Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.push_back({i, j});
  return Graph::from_edge_list(n, es);
}

std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = floyd(g);
  return std::all_of(d[0].begin(), d[0].end(), [](int x) { return x >= 0; });
}

namespace {

void paths_dfs(const Graph& g, int v, Path& p, std::vector<char>& used, std::vector<Path>& out) {
  if (p.back() == v) {
    out.push_back(p);
    return;
  }
  for (int w = 0; w < g.order(); ++w) {
    if (used[w] || !g.adjacent(p.back(), w)) continue;
    used[w] = 1;
    p.push_back(w);
    paths_dfs(g, v, p, used, out);
    p.pop_back();
    used[w] = 0;
  }
}

}  // namespace

std::vector<Path> simple_paths(const Graph& g, int u, int v) {
  std::vector<Path> out;
  Path p{u};
  std::vector<char> used(g.order(), 0);
  used[u] = 1;
  paths_dfs(g, v, p, used, out);
  return out;
}

bool has_chord_between(const Graph& g, const Path& p, int i, int j) {
  return j - i >= 2 && g.adjacent(p[i], p[j]);
}

bool is_induced(const Graph& g, const Path& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 2; j < p.size(); ++j)
      if (g.adjacent(p[i], p[j])) return false;
  return true;
}

bool is_even_chorded(const Graph& g, const Path& p) {
  const int last = static_cast<int>(p.size()) - 1;
  for (int i = 0; i <= last; ++i)
    for (int j = i + 2; j <= last; ++j) {
      if (!g.adjacent(p[i], p[j])) continue;
      if ((j - i) % 2 == 1) return false;
      if (i == 0 || j == last) return false;
    }
  return true;
}

bool is_triangle_path(const Graph& g, const Path& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 3; j < p.size(); ++j)
      if (g.adjacent(p[i], p[j])) return false;
  return true;
}

bool is_toll_walk(const Graph& g, const Path& w) {
  const std::size_t k = w.size() - 1;
  for (std::size_t i = 0; i <= k; ++i)
    if (g.adjacent(w[0], w[i]) && i != 1) return false;
  for (std::size_t j = 0; j <= k; ++j)
    if (g.adjacent(w[j], w[k]) && j != k - 1) return false;
  return true;
}

bool is_weakly_toll_walk(const Graph& g, const Path& w) {
  const std::size_t k = w.size() - 1;
  for (std::size_t i = 0; i <= k; ++i)
    if (g.adjacent(w[0], w[i]) && w[i] != w[1]) return false;
  for (std::size_t j = 0; j <= k; ++j)
    if (g.adjacent(w[j], w[k]) && w[j] != w[k - 1]) return false;
  return true;
}

namespace {

struct WalkSearch {
  const Graph& g;
  Walk kind;
  int target;
  int max_len;
  Path walk;
  Bits found = 0;

  // Only the start-side condition is used to cut the search; the full
  // definition is checked on each finished walk.
  bool start_ok(int w) const {
    const std::size_t i = walk.size();
    if (!g.adjacent(walk[0], w)) return true;
    return kind == Walk::toll ? i == 1 : (i == 1 || w == walk[1]);
  }

  void run() {
    if (walk.back() == target && walk.size() >= 2) {
      const bool ok = kind == Walk::toll ? is_toll_walk(g, walk) : is_weakly_toll_walk(g, walk);
      if (ok)
        for (int x : walk) found |= Bits{1} << x;
    }
    if (static_cast<int>(walk.size()) - 1 == max_len) return;
    for (int w = 0; w < g.order(); ++w) {
      if (!g.adjacent(walk.back(), w) || !start_ok(w)) continue;
      walk.push_back(w);
      run();
      walk.pop_back();
    }
  }
};

}  // namespace

Bits walk_interval(const Graph& g, Walk kind, int u, int v, int max_len) {
  if (u == v) return Bits{1} << u;
  WalkSearch s{g, kind, v, max_len, {u}};
  s.run();
  return s.found | (Bits{1} << u) | (Bits{1} << v);
}

Bits interval(const Graph& g, const std::string& kind, int u, int v) {
  Bits out = (Bits{1} << u) | (Bits{1} << v);
  if (u == v) return out;
  if (kind == "p3") {
    for (int x = 0; x < g.order(); ++x)
      if (g.adjacent(u, x) && g.adjacent(x, v)) out |= Bits{1} << x;
    return out;
  }
  const auto d = floyd(g);
  for (const Path& p : simple_paths(g, u, v)) {
    const int len = static_cast<int>(p.size()) - 1;
    bool ok = false;
    if (kind == "geodetic") ok = len == d[u][v];
    else if (kind == "monophonic") ok = is_induced(g, p);
    else if (kind == "m3") ok = is_induced(g, p) && (len >= 3 || len == 1);
    else if (kind == "strong") ok = is_even_chorded(g, p);
    else if (kind == "triangle-path") ok = is_triangle_path(g, p);
    else if (kind.size() > 1 && kind[0] == 'l') ok = is_induced(g, p) && len <= std::stoi(kind.substr(1));
    if (ok)
      for (int x : p) out |= Bits{1} << x;
  }
  return out;
}

Bits hull(const Graph& g, const std::string& kind, Bits s) {
  for (;;) {
    Bits next = s;
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v)
        if ((s >> u & 1) && (s >> v & 1)) next |= interval(g, kind, u, v);
    if (next == s) return s;
    s = next;
  }
}

Graph induced(const Graph& g, Bits s) {
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (s >> v & 1) keep.push_back(v);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) es.push_back({static_cast<int>(i), static_cast<int>(j)});
  return Graph::from_edge_list(static_cast<int>(keep.size()), es);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int i = 0; i < a.order() && same; ++i)
      for (int j = i + 1; j < a.order() && same; ++j) same = a.adjacent(i, j) == b.adjacent(perm[i], perm[j]);
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool has_induced(const Graph& g, const Graph& p) {
  for (Bits s = 0; s < (Bits{1} << g.order()); ++s)
    if (std::popcount(s) == p.order() && isomorphic(oracle::induced(g, s), p)) return true;
  return false;
}

Bits hull_f_free(const Graph& g, const std::vector<Graph>& family, Bits s) {
  for (;;) {
    Bits next = s;
    for (int x = 0; x < g.order(); ++x) {
      if (next >> x & 1) continue;
      for (const Graph& h : family) {
        bool forced = false;
        for (Bits t = s;; t = (t - 1) & s) {
          if (std::popcount(t) == h.order() - 1 && isomorphic(oracle::induced(g, t | (Bits{1} << x)), h)) forced = true;
          if (forced || t == 0) break;
        }
        if (forced) next |= Bits{1} << x;
      }
    }
    if (next == s) return s;
    s = next;
  }
}

Bits hull_p4_plus(const Graph& g, Bits s) {
  const int n = g.order();
  for (;;) {
    Bits next = s;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            const bool p4 = g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
                            !g.adjacent(a, d) && !g.adjacent(b, d);
            if (p4 && (s >> a & 1) && (s >> b & 1) && (s >> d & 1)) next |= Bits{1} << c;
          }
    if (next == s) return s;
    s = next;
  }
}

bool has_induced_cycle(const Graph& g, int min_len) {
  for (Bits s = 0; s < (Bits{1} << g.order()); ++s) {
    if (std::popcount(s) < min_len) continue;
    const Graph h = oracle::induced(g, s);
    bool two_regular = true;
    for (int v = 0; v < h.order() && two_regular; ++v) two_regular = h.degree(v) == 2;
    if (two_regular && connected(h)) return true;
  }
  return false;
}

bool chordal(const Graph& g) { return !has_induced_cycle(g, 4); }

bool has_asteroidal_triple(const Graph& g) {
  const int n = g.order();
  // a and b joined by a path avoiding N[c]: distance inside G minus N[c]
  auto joined = [&](int a, int b, int c) {
    std::vector<int> keep;
    int ia = -1, ib = -1;
    for (int x = 0; x < n; ++x) {
      if (x == c || g.adjacent(x, c)) continue;
      if (x == a) ia = static_cast<int>(keep.size());
      if (x == b) ib = static_cast<int>(keep.size());
      keep.push_back(x);
    }
    if (ia < 0 || ib < 0) return false;
    Bits s = 0;
    for (int x : keep) s |= Bits{1} << x;
    return floyd(oracle::induced(g, s))[ia][ib] >= 0;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (joined(a, b, c) && joined(a, c, b) && joined(b, c, a)) return true;
  return false;
}

std::vector<Bits> maximal_cliques(const Graph& g) {
  const int n = g.order();
  std::vector<Bits> cliques;
  for (Bits s = 1; s < (Bits{1} << n); ++s) {
    bool clique = true;
    for (int i = 0; i < n && clique; ++i)
      for (int j = i + 1; j < n && clique; ++j)
        if ((s >> i & 1) && (s >> j & 1)) clique = g.adjacent(i, j);
    if (clique) cliques.push_back(s);
  }
  std::vector<Bits> out;
  for (Bits c : cliques)
    if (std::none_of(cliques.begin(), cliques.end(), [&](Bits d) { return d != c && (c & ~d) == 0; }))
      out.push_back(c);
  return out;
}

bool interval_by_clique_orderings(const Graph& g) {
  auto cliques = maximal_cliques(g);
  std::sort(cliques.begin(), cliques.end());
  do {
    bool ok = true;
    for (int v = 0; v < g.order() && ok; ++v) {
      int first = -1, last = -1, count = 0;
      for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
        if (cliques[i] >> v & 1) {
          if (first < 0) first = i;
          last = i;
          ++count;
        }
      ok = count == 0 || last - first + 1 == count;
    }
    if (ok) return true;
  } while (std::next_permutation(cliques.begin(), cliques.end()));
  return false;
}

bool proper_interval_by_umbrella(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < g.order() && ok; ++i)
      for (int j = i + 1; j < g.order() && ok; ++j)
        for (int k = j + 1; k < g.order() && ok; ++k)
          if (g.adjacent(order[i], order[k]))
            ok = g.adjacent(order[i], order[j]) && g.adjacent(order[j], order[k]);
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

bool bipartite(const Graph& g) {
  const int n = g.order();
  for (Bits side = 0; side < (Bits{1} << n); ++side) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (g.adjacent(i, j)) ok = ((side >> i) & 1) != ((side >> j) & 1);
    if (ok) return true;
  }
  return n == 0;
}

bool acyclic(const Graph& g) {
  int components = 0;
  std::vector<char> seen(g.order(), 0);
  const auto d = floyd(g);
  for (int v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    ++components;
    for (int w = 0; w < g.order(); ++w)
      if (d[v][w] >= 0) seen[w] = 1;
  }
  return g.edge_count() == g.order() - components;
}

std::string brute_canonical(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < g.order(); ++i)
      for (int j = i + 1; j < g.order(); ++j) s += g.adjacent(perm[i], perm[j]) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
    out += static_cast<char>(63 + value);
  }
  return out;
}

}  // namespace oracle
