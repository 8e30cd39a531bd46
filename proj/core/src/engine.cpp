#include "gconvex/engine.hpp"

#include <algorithm>
#include <bit>

#include "gconvex/paths.hpp"
#include "gconvex/walks.hpp"

namespace gconvex {

ClosureSystem::ClosureSystem(const Graph& g, const ConvexitySpec& c, const Limits& limits) : n_(g.order()) {
  switch (c.kind()) {
    case ConvexityKind::f_free:
      for (const PatternGraph& h : c.family()) {
        for (Mask t : induced_occurrences(g, h.graph, limits)) {
          for (Mask rest = t; rest != 0; rest &= rest - 1) {
            const Mask x = rest & (~rest + 1);
            rules_.push_back({t & ~x, x});
          }
        }
      }
      break;
    case ConvexityKind::p4_plus:
      // Each induced P4 a-b-c-d is found from both ends; keep the a < d copy.
      for (Vertex a = 0; a < n_; ++a) {
        for_each_path_from(g, a, PathRule::induced(), {3, 3}, [&](std::span<const Vertex> p) {
          if (p[0] > p[3]) return;
          const Mask ends = bit(p[0]) | bit(p[3]);
          rules_.push_back({ends | bit(p[1]), bit(p[2])});
          rules_.push_back({ends | bit(p[2]), bit(p[1])});
        });
      }
      break;
    default: {
      const IntervalTable table = IntervalTable::build(g, c);
      for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v) {
          const Mask premise = bit(u) | bit(v);
          if (table.at(u, v) != premise) rules_.push_back({premise, table.at(u, v)});
        }
      break;
    }
  }
  std::sort(rules_.begin(), rules_.end(), [](const Rule& a, const Rule& b) {
    return a.premise != b.premise ? a.premise < b.premise : a.conclusion < b.conclusion;
  });
  rules_.erase(std::unique(rules_.begin(), rules_.end(),
                           [](const Rule& a, const Rule& b) {
                             return a.premise == b.premise && a.conclusion == b.conclusion;
                           }),
               rules_.end());
}

Mask ClosureSystem::expand_mask(Mask s) const {
  Mask out = s;
  for (const Rule& r : rules_)
    if ((r.premise & ~s) == 0) out |= r.conclusion;
  return out;
}

Mask ClosureSystem::hull_mask(Mask s) const {
  for (;;) {
    Mask grown = s;
    for (const Rule& r : rules_)
      if ((r.premise & ~grown) == 0) grown |= r.conclusion;
    if (grown == s) return s;
    s = grown;
  }
}

VertexSet ClosureSystem::extreme_vertices(const VertexSet& s) const {
  if (!is_convex(s)) throw PreconditionError("extreme vertices requested for a non-convex set " + to_string(s));
  Mask out = 0;
  for (Vertex x : s)
    if (expand_mask(s.bits() & ~bit(x)) == (s.bits() & ~bit(x))) out |= bit(x);
  return VertexSet(n_, out);
}

namespace {

void check_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InputError("vertex set does not index this graph");
}

std::vector<char> convex_table(const ClosureSystem& closure, const Limits& limits, const char* what) {
  require_within(closure.order(), limits, what);
  const std::size_t total = std::size_t{1} << closure.order();
  std::vector<char> convex(total);
  for (std::size_t s = 0; s < total; ++s) {
    const auto m = static_cast<Mask>(s);
    convex[s] = closure.expand_mask(m) == m;
  }
  return convex;
}

}  // namespace

VertexSet expand_once(const Graph& g, const ConvexitySpec& c, const VertexSet& s) {
  check_set(g, s);
  return ClosureSystem(g, c).expand_once(s);
}

VertexSet hull(const Graph& g, const ConvexitySpec& c, const VertexSet& s) {
  check_set(g, s);
  return ClosureSystem(g, c).hull(s);
}

bool is_convex(const Graph& g, const ConvexitySpec& c, const VertexSet& s) {
  check_set(g, s);
  return ClosureSystem(g, c).is_convex(s);
}

VertexSet extreme_vertices(const Graph& g, const ConvexitySpec& c, const VertexSet& s) {
  check_set(g, s);
  return ClosureSystem(g, c).extreme_vertices(s);
}

std::vector<VertexSet> all_convex_sets(const ClosureSystem& closure, const Limits& limits) {
  const auto convex = convex_table(closure, limits, "convex set enumeration");
  std::vector<VertexSet> out;
  for (std::size_t s = 0; s < convex.size(); ++s)
    if (convex[s]) out.emplace_back(closure.order(), static_cast<Mask>(s));
  return out;
}

std::vector<VertexSet> all_convex_sets(const Graph& g, const ConvexitySpec& c, const Limits& limits) {
  require_within(g.order(), limits, "convex set enumeration");
  return all_convex_sets(ClosureSystem(g, c, limits), limits);
}

std::string to_string(GeometryMode mode) { return mode == GeometryMode::mkm ? "mkm" : "antiexchange"; }

GeometryReport is_convex_geometry_mkm(const ClosureSystem& closure, const Limits& limits) {
  const auto convex = convex_table(closure, limits, "convex geometry test");
  const int n = closure.order();
  GeometryReport report;
  report.mode = GeometryMode::mkm;
  for (std::size_t s = 0; s < convex.size(); ++s) {
    if (!convex[s]) continue;
    const auto set = static_cast<Mask>(s);
    Mask ext = 0;
    for (Mask rest = set; rest != 0; rest &= rest - 1) {
      const Mask x = rest & (~rest + 1);
      if (convex[set & ~x]) ext |= x;
    }
    const Mask h = closure.hull_mask(ext);
    if (h != set) {
      report.verdict = false;
      report.violating_set = VertexSet(n, set);
      report.extremes = VertexSet(n, ext);
      report.hull_of_extremes = VertexSet(n, h);
      return report;
    }
  }
  return report;
}

GeometryReport is_convex_geometry_mkm(const Graph& g, const ConvexitySpec& c, const Limits& limits) {
  require_within(g.order(), limits, "convex geometry test");
  return is_convex_geometry_mkm(ClosureSystem(g, c, limits), limits);
}

GeometryReport satisfies_antiexchange(const ClosureSystem& closure, const Limits& limits) {
  const auto convex = convex_table(closure, limits, "antiexchange test");
  const int n = closure.order();
  GeometryReport report;
  report.mode = GeometryMode::antiexchange;
  std::vector<Mask> grown(n);
  for (std::size_t s = 0; s < convex.size(); ++s) {
    if (!convex[s]) continue;
    const auto set = static_cast<Mask>(s);
    const Mask outside = full_mask(n) & ~set;
    for (Mask rest = outside; rest != 0; rest &= rest - 1) {
      const Vertex y = std::countr_zero(rest);
      grown[y] = closure.hull_mask(set | bit(y));
    }
    for (Mask xs = outside; xs != 0; xs &= xs - 1) {
      const Vertex x = std::countr_zero(xs);
      for (Mask ys = outside & ~full_mask(x + 1); ys != 0; ys &= ys - 1) {
        const Vertex y = std::countr_zero(ys);
        if ((grown[y] & bit(x)) && (grown[x] & bit(y))) {
          report.verdict = false;
          report.witness = AntiexchangeWitness{VertexSet(n, set), x, y};
          report.violating_set = VertexSet(n, set);
          return report;
        }
      }
    }
  }
  return report;
}

GeometryReport satisfies_antiexchange(const Graph& g, const ConvexitySpec& c, const Limits& limits) {
  require_within(g.order(), limits, "antiexchange test");
  return satisfies_antiexchange(ClosureSystem(g, c, limits), limits);
}

bool antiexchange_over_all_sets(const ClosureSystem& closure, const Limits& limits) {
  const int n = closure.order();
  require_within(n, limits, "antiexchange test");
  const std::size_t total = std::size_t{1} << n;
  for (std::size_t s = 0; s < total; ++s) {
    const Mask set = closure.hull_mask(static_cast<Mask>(s));
    const Mask outside = full_mask(n) & ~set;
    for (Mask xs = outside; xs != 0; xs &= xs - 1) {
      const Vertex x = std::countr_zero(xs);
      const Mask hx = closure.hull_mask(set | bit(x));
      for (Mask ys = outside & ~full_mask(x + 1); ys != 0; ys &= ys - 1) {
        const Vertex y = std::countr_zero(ys);
        if ((hx & bit(y)) && (closure.hull_mask(set | bit(y)) & bit(x))) return false;
      }
    }
  }
  return true;
}

}  // namespace gconvex
