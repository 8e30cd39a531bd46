#include "gconvex/patterns.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <set>

#include "gconvex/canonical.hpp"

namespace gconvex {

Vertex PatternGraph::vertex(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<Vertex>(i);
  throw InputError("pattern " + name + " has no vertex '" + std::string(label) + "'");
}

namespace patterns {

namespace {

std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

std::vector<std::string> numbered(int n, int from = 0) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i + from));
  return out;
}

// Edge list spelled with letter labels, "ab bc cd".
Graph from_letters(int n, std::string_view spec) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < spec.size();) {
    if (spec[i] == ' ') {
      ++i;
      continue;
    }
    es.push_back({spec[i] - 'a', spec[i + 1] - 'a'});
    i += 2;
  }
  return Graph::from_edge_list(n, es);
}

constexpr std::string_view kGemEdges = "ab bc cd ae be ce de";
constexpr std::string_view kHouseEdges = "ab bc cd ad ae be";
constexpr std::string_view kDominoEdges = "ab bc cd ad ce ef df";
constexpr std::string_view kAEdges = "ab bc cd ad ce df";
constexpr std::string_view kClawEdges = "ab ac ad";

bool parse_number(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

PatternGraph gem() { return {"gem", from_letters(5, kGemEdges), letters(5)}; }
PatternGraph house() { return {"house", from_letters(5, kHouseEdges), letters(5)}; }
PatternGraph domino() { return {"domino", from_letters(6, kDominoEdges), letters(6)}; }
PatternGraph letter_a() { return {"A", from_letters(6, kAEdges), letters(6)}; }
PatternGraph claw() { return {"K1,3", from_letters(4, kClawEdges), letters(4)}; }

PatternGraph cycle(int k) { return {"C" + std::to_string(k), Graph::cycle(k), numbered(k)}; }
PatternGraph path(int k) { return {"P" + std::to_string(k), Graph::path(k), numbered(k)}; }
PatternGraph complete(int k) { return {"K" + std::to_string(k), Graph::complete(k), numbered(k)}; }

PatternGraph complete_bipartite(int a, int b) {
  return {"K" + std::to_string(a) + "," + std::to_string(b), Graph::complete_bipartite(a, b),
          numbered(a + b)};
}

PatternGraph n_gem(int n) {
  if (n < 1) throw InputError("n-gem needs n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, i + 1});
  for (int i = 0; i <= n; ++i) es.push_back({i, n + 1});
  auto labels = numbered(n + 1);
  for (auto& l : labels) l = "x" + l;
  labels.push_back("u");
  return {std::to_string(n) + "-gem", Graph::from_edge_list(n + 2, es), labels};
}

PatternGraph l3_example() {
  const std::vector<std::pair<int, int>> drawn = {{1, 3}, {3, 4}, {4, 6}, {6, 7}, {5, 7},
                                                  {5, 6}, {2, 4}, {2, 5}, {4, 5}, {2, 3}, {1, 2}};
  std::vector<Edge> es;
  for (auto [a, b] : drawn) es.push_back({a - 1, b - 1});
  return {"l3-example", Graph::from_edge_list(7, es), numbered(7, 1)};
}

std::vector<PatternGraph> odd_cycles(int max_order) {
  std::vector<PatternGraph> out;
  for (int k = 3; k <= max_order; k += 2) out.push_back(cycle(k));
  return out;
}

std::vector<PatternGraph> kuratowski_subdivisions(int max_order) {
  std::vector<PatternGraph> out;
  std::set<std::string> seen;
  const Limits wide{kMaxVertices};

  auto expand = [&](const Graph& base, const std::string& base_name) {
    const auto base_edges = base.edges();
    const int m = static_cast<int>(base_edges.size());
    for (int extra = 0; base.order() + extra <= max_order; ++extra) {
      std::vector<int> split(m, 0);
      // Every composition of `extra` into m non-negative parts.
      std::function<void(int, int)> place = [&](int edge, int left) {
        if (edge == m - 1) {
          split[edge] = left;
          std::vector<Edge> es;
          int next = base.order();
          for (int i = 0; i < m; ++i) {
            Vertex prev = base_edges[i].u;
            for (int s = 0; s < split[i]; ++s) {
              es.push_back({prev, next});
              prev = next++;
            }
            es.push_back({prev, base_edges[i].v});
          }
          Graph g = Graph::from_edge_list(next, es);
          std::string key = canonical_form(g, wide);
          if (seen.insert(key).second) {
            out.push_back({base_name + "+" + std::to_string(extra) + "#" + std::to_string(out.size()), g,
                           numbered(g.order())});
          }
          return;
        }
        for (int s = 0; s <= left; ++s) {
          split[edge] = s;
          place(edge + 1, left - s);
        }
      };
      place(0, extra);
    }
  };
  expand(Graph::complete(5), "K5");
  expand(Graph::complete_bipartite(3, 3), "K3,3");
  return out;
}

PatternGraph by_name(std::string_view name) {
  if (name == "gem") return gem();
  if (name == "house") return house();
  if (name == "domino") return domino();
  if (name == "A") return letter_a();
  if (name == "claw" || name == "K1,3") return claw();
  int a = 0;
  int b = 0;
  if (name.size() > 1 && (name[0] == 'C' || name[0] == 'P' || name[0] == 'K')) {
    const std::string_view rest = name.substr(1);
    if (auto comma = rest.find(','); comma != std::string_view::npos && name[0] == 'K') {
      if (parse_number(rest.substr(0, comma), a) && parse_number(rest.substr(comma + 1), b) && a >= 1 &&
          b >= 1 && a + b <= kMaxVertices) {
        return complete_bipartite(a, b);
      }
    } else if (parse_number(rest, a)) {
      if (name[0] == 'C' && a >= 3 && a <= kMaxVertices) return cycle(a);
      if (name[0] == 'P' && a >= 1 && a <= kMaxVertices) return path(a);
      if (name[0] == 'K' && a >= 1 && a <= kMaxVertices) return complete(a);
    }
  }
  if (auto dash = name.find("-gem"); dash != std::string_view::npos && dash + 4 == name.size()) {
    if (parse_number(name.substr(0, dash), a) && a >= 1 && a + 2 <= kMaxVertices) return n_gem(a);
  }
  throw InputError("unknown pattern '" + std::string(name) + "'");
}

std::vector<std::string> check_library() {
  std::vector<std::string> problems;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };
  auto same_edges = [](const Graph& g, int n, std::string_view spec) { return g == from_letters(n, spec); };

  const PatternGraph gm = gem();
  expect(same_edges(gm.graph, 5, kGemEdges), "gem edge list");
  expect(gm.graph.edge_count() == 7, "gem has 7 edges");
  expect(gm.graph.degree(gm.vertex("e")) == 4, "gem apex e is universal");
  expect(induced(gm.graph, 0b01111) == Graph::path(4), "gem a-b-c-d is an induced P4");

  const PatternGraph hs = house();
  expect(same_edges(hs.graph, 5, kHouseEdges), "house edge list");
  expect(contains_induced(hs.graph, Graph::cycle(4)).has_value(), "house contains C4");
  expect(hs.graph.degree(hs.vertex("e")) == 2, "house roof e has degree 2");

  const PatternGraph dm = domino();
  expect(same_edges(dm.graph, 6, kDominoEdges), "domino edge list");
  expect(dm.graph.edge_count() == 7, "domino has 7 edges");

  const PatternGraph la = letter_a();
  expect(same_edges(la.graph, 6, kAEdges), "A edge list");
  Graph domino_minus_ef = Graph::from_edge_list(6, [] {
    std::vector<Edge> es;
    for (const Edge& e : domino().graph.edges())
      if (!(e.u == 4 && e.v == 5)) es.push_back(e);
    return es;
  }());
  expect(la.graph == domino_minus_ef, "A is the domino minus ef");

  const PatternGraph cl = claw();
  expect(same_edges(cl.graph, 4, kClawEdges), "claw edge list");
  expect(cl.graph == Graph::star(3), "claw is the star with three leaves");

  const PatternGraph ex = l3_example();
  expect(ex.graph.edge_count() == 11, "l3 example has 11 edges");
  expect(is_connected(ex.graph), "l3 example is connected");
  return problems;
}

}  // namespace patterns

namespace {

struct Matcher {
  const Graph& g;
  const Graph& p;
  std::vector<Vertex> order;  // pattern vertices in matching order
  std::vector<Vertex> image;
  Mask used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex pv = order[depth];
    for (Vertex gv = 0; gv < g.order(); ++gv) {
      if (used & bit(gv)) continue;
      if (g.degree(gv) < p.degree(pv)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex q = order[i];
        ok = p.adjacent(pv, q) == g.adjacent(gv, image[q]);
      }
      if (!ok) continue;
      image[pv] = gv;
      used |= bit(gv);
      if (extend(depth + 1)) return true;
      used &= ~bit(gv);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& pattern) {
  if (pattern.order() > g.order()) return std::nullopt;
  Matcher m{g, pattern, {}, std::vector<Vertex>(pattern.order(), -1), 0};
  // Connected-first order: each next vertex touches the placed ones when possible.
  Mask placed = 0;
  while (m.order.size() < static_cast<std::size_t>(pattern.order())) {
    Vertex pick = -1;
    int best = -1;
    for (Vertex v = 0; v < pattern.order(); ++v) {
      if (placed & bit(v)) continue;
      const int score = std::popcount(pattern.row(v) & placed) * 64 + pattern.degree(v);
      if (score > best) {
        best = score;
        pick = v;
      }
    }
    m.order.push_back(pick);
    placed |= bit(pick);
  }
  if (!m.extend(0)) return std::nullopt;
  return m.image;
}

std::vector<Mask> induced_occurrences(const Graph& g, const Graph& pattern, const Limits& limits) {
  std::vector<Mask> out;
  const int k = pattern.order();
  const int n = g.order();
  if (k > n) return out;
  if (k == 0) return {0};
  const std::string target = canonical_form(pattern, Limits{kMaxVertices});
  const int edges = pattern.edge_count();
  require_within(n, limits, "induced occurrence search");
  for (Mask s = full_mask(k); s != 0 && s <= full_mask(n);) {
    const Graph sub = induced(g, s);
    if (sub.edge_count() == edges && canonical_form(sub, Limits{kMaxVertices}) == target) out.push_back(s);
    // next subset with the same popcount
    const Mask low = s & (~s + 1);
    const Mask ripple = s + low;
    if (ripple == 0) break;
    s = ripple | (((s ^ ripple) >> 2) / low);
  }
  return out;
}

}  // namespace gconvex
