#include "gconvex/walks.hpp"

#include <bit>
#include <deque>
#include <optional>

#include "gconvex/paths.hpp"

namespace gconvex {

namespace {

struct PathSystem {
  PathRule rule;
  LengthBounds bounds;
};

std::optional<PathSystem> path_system(const ConvexitySpec& c) {
  switch (c.kind()) {
    case ConvexityKind::monophonic: return PathSystem{PathRule::induced(), {}};
    case ConvexityKind::m3: return PathSystem{PathRule::induced(), {3, kMaxVertices}};
    case ConvexityKind::lk: return PathSystem{PathRule::induced(), {0, c.k()}};
    case ConvexityKind::strong: return PathSystem{PathRule::even_chorded(), {}};
    case ConvexityKind::triangle_path: return PathSystem{PathRule::triangle(), {}};
    default: return std::nullopt;
  }
}

Mask path_mask(std::span<const Vertex> p) {
  Mask m = 0;
  for (Vertex v : p) m |= bit(v);
  return m;
}

void require_oracle(const ConvexitySpec& c) {
  if (!c.has_interval_oracle()) {
    throw UnsupportedOracleError("convexity " + c.name() + " is defined by a closure rule and has no interval");
  }
}

Mask geodetic_interval(const DistanceTable& d, int n, Vertex u, Vertex v) {
  Mask m = bit(u) | bit(v);
  const int duv = d.at(u, v);
  if (duv == kInfinity) return m;
  for (Vertex x = 0; x < n; ++x) {
    const int a = d.at(u, x);
    const int b = d.at(x, v);
    if (a != kInfinity && b != kInfinity && a + b == duv) m |= bit(x);
  }
  return m;
}

struct TollParts {
  Mask common;   // N(u) and N(v)
  Mask near_u;   // N(u) - N[v]
  Mask near_v;   // N(v) - N[u]
  Mask rest;     // V - N[u] - N[v]
};

TollParts toll_parts(const Graph& g, Vertex u, Vertex v) {
  const Mask nu = g.row(u);
  const Mask nv = g.row(v);
  return {nu & nv, nu & ~g.closed_row(v), nv & ~g.closed_row(u),
          full_mask(g.order()) & ~(g.closed_row(u) | g.closed_row(v))};
}

void check_triple(const Graph& g, Vertex u, Vertex v, Vertex x) {
  VertexSet::check_vertex(g.order(), u);
  VertexSet::check_vertex(g.order(), v);
  VertexSet::check_vertex(g.order(), x);
}

}  // namespace

bool toll_membership(const Graph& g, Vertex u, Vertex v, Vertex x) {
  check_triple(g, u, v, x);
  if (x == u || x == v) return true;
  if (u == v || g.adjacent(u, v)) return false;
  const TollParts p = toll_parts(g, u, v);
  if (p.common & bit(x)) return true;
  for (Mask as = p.near_u; as != 0; as &= as - 1) {
    const Vertex a = std::countr_zero(as);
    for (Mask bs = p.near_v; bs != 0; bs &= bs - 1) {
      const Vertex b = std::countr_zero(bs);
      const Mask allowed = p.rest | bit(x);
      if (x != a && x != b && !(p.rest & bit(x))) continue;
      // a and b lie outside the rest, so each search avoids the other one
      // unless it is x itself.
      const bool from_a = (reach(g, a, allowed) & bit(x)) != 0;
      const bool from_b = (reach(g, b, allowed) & bit(x)) != 0;
      if (from_a && from_b) return true;
    }
  }
  return false;
}

bool weakly_toll_membership(const Graph& g, Vertex u, Vertex v, Vertex x) {
  check_triple(g, u, v, x);
  if (x == u || x == v) return true;
  if (u == v || g.adjacent(u, v)) return false;
  const TollParts p = toll_parts(g, u, v);
  for (Mask as = p.common; as != 0; as &= as - 1) {
    if (reach(g, std::countr_zero(as), p.rest) & bit(x)) return true;
  }
  for (Mask as = p.near_u; as != 0; as &= as - 1) {
    const Vertex a = std::countr_zero(as);
    for (Mask bs = p.near_v; bs != 0; bs &= bs - 1) {
      const Vertex b = std::countr_zero(bs);
      const Mask comp = reach(g, a, p.rest | bit(b));
      if ((comp & bit(b)) && (comp & bit(x))) return true;
    }
  }
  return false;
}

VertexSet toll_interval(const Graph& g, Vertex u, Vertex v) {
  VertexSet::check_vertex(g.order(), u);
  VertexSet::check_vertex(g.order(), v);
  const Mask ends = bit(u) | bit(v);
  if (u == v || g.adjacent(u, v)) return VertexSet(g.order(), ends);
  const TollParts p = toll_parts(g, u, v);
  // Everything reachable through the rest from some first / last interior vertex.
  Mask from_u = 0;
  for (Mask as = p.near_u; as != 0; as &= as - 1) from_u |= reach(g, std::countr_zero(as), p.rest);
  Mask from_v = 0;
  for (Mask bs = p.near_v; bs != 0; bs &= bs - 1) from_v |= reach(g, std::countr_zero(bs), p.rest);
  Mask out = ends | p.common | (from_u & from_v & p.rest);
  for (Mask as = p.near_u; as != 0; as &= as - 1) {
    const Vertex a = std::countr_zero(as);
    if (g.row(a) & from_v) out |= bit(a);
  }
  for (Mask bs = p.near_v; bs != 0; bs &= bs - 1) {
    const Vertex b = std::countr_zero(bs);
    if (g.row(b) & from_u) out |= bit(b);
  }
  return VertexSet(g.order(), out);
}

VertexSet weakly_toll_interval(const Graph& g, Vertex u, Vertex v) {
  VertexSet::check_vertex(g.order(), u);
  VertexSet::check_vertex(g.order(), v);
  Mask out = bit(u) | bit(v);
  if (u == v || g.adjacent(u, v)) return VertexSet(g.order(), out);
  const TollParts p = toll_parts(g, u, v);
  for (Mask as = p.common; as != 0; as &= as - 1) out |= reach(g, std::countr_zero(as), p.rest);
  for (Mask as = p.near_u; as != 0; as &= as - 1) {
    const Vertex a = std::countr_zero(as);
    for (Mask bs = p.near_v; bs != 0; bs &= bs - 1) {
      const Mask b = bs & (~bs + 1);
      const Mask comp = reach(g, a, p.rest | b);
      if (comp & b) out |= comp;
    }
  }
  return VertexSet(g.order(), out);
}

namespace {

// Walk states for the oracle. Position 0 (the walk sitting on u) is a
// dedicated start state; every other state is a vertex plus the bookkeeping
// the walk definition needs to judge future steps and the final vertex.
class WalkAutomaton {
 public:
  WalkAutomaton(const Graph& g, WalkKind kind, Vertex u, Vertex v) : g_(g), kind_(kind), u_(u), v_(v), n_(g.order()) {
    per_vertex_ = kind == WalkKind::toll ? 4 : n_ * (n_ + 1);
    start_ = n_ * per_vertex_;
  }

  int state_count() const { return start_ + 1; }
  int start() const { return start_; }
  Vertex vertex_of(int s) const { return s == start_ ? u_ : s / per_vertex_; }

  template <typename F>
  void successors(int s, F&& emit) const {
    if (s == start_) {
      for (Mask ys = g_.row(u_); ys != 0; ys &= ys - 1) {
        const Vertex y = std::countr_zero(ys);
        const bool u_near_v = g_.adjacent(u_, v_);
        if (kind_ == WalkKind::toll) {
          emit(toll_state(y, u_near_v, false));
        } else {
          emit(weak_state(y, y, u_near_v ? u_ : n_));
        }
      }
      return;
    }
    const Vertex c = s / per_vertex_;
    const int rest = s % per_vertex_;
    const bool c_near_v = g_.adjacent(c, v_);
    if (kind_ == WalkKind::toll) {
      const bool seen_before = rest & 2;  // some of u_0..u_{i-1} adjacent to v
      for (Mask ys = g_.row(c); ys != 0; ys &= ys - 1) {
        const Vertex y = std::countr_zero(ys);
        // u_0 u_i in E forces i = 1, and y sits at position >= 2.
        if (g_.adjacent(u_, y)) continue;
        emit(toll_state(y, seen_before || c_near_v, seen_before));
      }
      return;
    }
    const Vertex first = rest / (n_ + 1);
    const int seen = rest % (n_ + 1);  // the one vertex of N(v) seen before c, or n
    int next_seen = seen;
    if (c_near_v) {
      if (seen != n_ && seen != c) return;  // two distinct neighbours of v: no valid ending remains
      next_seen = c;
    }
    for (Mask ys = g_.row(c); ys != 0; ys &= ys - 1) {
      const Vertex y = std::countr_zero(ys);
      // u_0 u_i in E forces u_i = u_1.
      if (g_.adjacent(u_, y) && y != first) continue;
      emit(weak_state(y, first, next_seen));
    }
  }

  bool accepting(int s) const {
    if (s == start_) return false;
    const Vertex c = s / per_vertex_;
    if (c != v_) return false;
    const int rest = s % per_vertex_;
    if (kind_ == WalkKind::toll) {
      // u_j u_k in E forces j = k - 1: nothing before the penultimate vertex touches v.
      return (rest & 1) == 0;
    }
    // Neighbours of v seen so far must all be the penultimate vertex, which
    // is itself such a neighbour; the state keeps at most one.
    return true;
  }

 private:
  int toll_state(Vertex c, bool seen, bool seen_before_prev) const {
    return c * per_vertex_ + (seen ? 2 : 0) + (seen_before_prev ? 1 : 0);
  }
  int weak_state(Vertex c, Vertex first, int seen) const {
    return c * per_vertex_ + first * (n_ + 1) + seen;
  }

  const Graph& g_;
  WalkKind kind_;
  Vertex u_;
  Vertex v_;
  int n_;
  int per_vertex_ = 0;
  int start_ = 0;
};

}  // namespace

VertexSet bounded_walk_interval(const Graph& g, WalkKind kind, Vertex u, Vertex v, int max_len) {
  VertexSet::check_vertex(g.order(), u);
  VertexSet::check_vertex(g.order(), v);
  if (u == v) return VertexSet(g.order(), bit(u));
  if (max_len <= 0) max_len = 2 * g.order() + 2;

  const WalkAutomaton walks(g, kind, u, v);
  const int count = walks.state_count();
  constexpr int kUnseen = -1;

  std::vector<int> forward(count, kUnseen);
  std::vector<std::vector<int>> preds(count);
  std::deque<int> queue;
  forward[walks.start()] = 0;
  queue.push_back(walks.start());
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    if (forward[s] == max_len) continue;
    walks.successors(s, [&](int t) {
      preds[t].push_back(s);
      if (forward[t] == kUnseen) {
        forward[t] = forward[s] + 1;
        queue.push_back(t);
      }
    });
  }

  std::vector<int> backward(count, kUnseen);
  for (int s = 0; s < count; ++s) {
    if (forward[s] != kUnseen && walks.accepting(s)) {
      backward[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    for (int p : preds[s]) {
      if (backward[p] == kUnseen) {
        backward[p] = backward[s] + 1;
        queue.push_back(p);
      }
    }
  }

  Mask out = 0;
  for (int s = 0; s < count; ++s) {
    if (forward[s] != kUnseen && backward[s] != kUnseen && forward[s] + backward[s] <= max_len) {
      out |= bit(walks.vertex_of(s));
    }
  }
  return VertexSet(g.order(), out);
}

bool bounded_walk_oracle(const Graph& g, WalkKind kind, Vertex u, Vertex v, Vertex x, int max_len) {
  check_triple(g, u, v, x);
  return bounded_walk_interval(g, kind, u, v, max_len).contains(x);
}

VertexSet interval(const Graph& g, const ConvexitySpec& c, Vertex u, Vertex v) {
  require_oracle(c);
  VertexSet::check_vertex(g.order(), u);
  VertexSet::check_vertex(g.order(), v);
  const int n = g.order();
  if (u == v) return VertexSet(n, bit(u));
  switch (c.kind()) {
    case ConvexityKind::geodetic:
      return VertexSet(n, geodetic_interval(distances(g), n, u, v));
    case ConvexityKind::p3:
      return VertexSet(n, bit(u) | bit(v) | (g.row(u) & g.row(v)));
    case ConvexityKind::toll:
      return toll_interval(g, u, v);
    case ConvexityKind::weakly_toll:
      return weakly_toll_interval(g, u, v);
    default:
      break;
  }
  const PathSystem sys = *path_system(c);
  Mask m = bit(u) | bit(v);
  for_each_path(g, u, v, sys.rule, sys.bounds, [&](std::span<const Vertex> p) { m |= path_mask(p); });
  return VertexSet(n, m);
}

VertexSet interval_of_set(const Graph& g, const ConvexitySpec& c, const VertexSet& s) {
  require_oracle(c);
  if (s.universe() != g.order()) throw InputError("vertex set does not index this graph");
  const IntervalTable table = IntervalTable::build(g, c);
  Mask m = s.bits();
  for (Vertex a : s)
    for (Vertex b : s)
      if (a < b) m |= table.at(a, b);
  return VertexSet(g.order(), m);
}

IntervalTable IntervalTable::build(const Graph& g, const ConvexitySpec& c) {
  require_oracle(c);
  const int n = g.order();
  IntervalTable t(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) t.cell(u, v) = bit(u) | bit(v);

  switch (c.kind()) {
    case ConvexityKind::geodetic: {
      const DistanceTable d = distances(g);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          if (u != v) t.cell(u, v) = geodetic_interval(d, n, u, v);
      return t;
    }
    case ConvexityKind::p3:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          if (u != v) t.cell(u, v) |= g.row(u) & g.row(v);
      return t;
    case ConvexityKind::toll:
    case ConvexityKind::weakly_toll:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          const Mask m = c.kind() == ConvexityKind::toll ? toll_interval(g, u, v).bits()
                                                         : weakly_toll_interval(g, u, v).bits();
          t.cell(u, v) = m;
          t.cell(v, u) = m;
        }
      return t;
    default:
      break;
  }
  const PathSystem sys = *path_system(c);
  for (Vertex u = 0; u < n; ++u) {
    for_each_path_from(g, u, sys.rule, sys.bounds, [&](std::span<const Vertex> p) {
      if (p.size() > 1) t.cell(u, p.back()) |= path_mask(p);
    });
  }
  return t;
}

}  // namespace gconvex
