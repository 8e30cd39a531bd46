#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gconvex/convexity.hpp"
#include "gconvex/graph.hpp"

namespace gconvex {

/// A convexity compiled against one graph as a list of closure rules
/// "premise contained in S forces conclusion into S".
///
/// Interval convexities contribute one rule per vertex pair (premise {u, v},
/// conclusion I(u, v)); F-free and P4+ contribute their forcing rules
/// directly. Every operation below is a fixpoint computation over the rules.
class ClosureSystem {
 public:
  ClosureSystem(const Graph& g, const ConvexitySpec& c, const Limits& limits = {});

  int order() const noexcept { return n_; }

  VertexSet expand_once(const VertexSet& s) const { return VertexSet(n_, expand_mask(s.bits())); }
  VertexSet hull(const VertexSet& s) const { return VertexSet(n_, hull_mask(s.bits())); }
  bool is_convex(const VertexSet& s) const { return expand_mask(s.bits()) == s.bits(); }
  /// Throws PreconditionError when s is not convex.
  VertexSet extreme_vertices(const VertexSet& s) const;

  Mask expand_mask(Mask s) const;
  Mask hull_mask(Mask s) const;

 private:
  struct Rule {
    Mask premise;
    Mask conclusion;
  };

  int n_;
  std::vector<Rule> rules_;
};

VertexSet expand_once(const Graph& g, const ConvexitySpec& c, const VertexSet& s);
VertexSet hull(const Graph& g, const ConvexitySpec& c, const VertexSet& s);
bool is_convex(const Graph& g, const ConvexitySpec& c, const VertexSet& s);
VertexSet extreme_vertices(const Graph& g, const ConvexitySpec& c, const VertexSet& s);

/// All convex sets in increasing order of their bit pattern.
std::vector<VertexSet> all_convex_sets(const Graph& g, const ConvexitySpec& c, const Limits& limits = {});
std::vector<VertexSet> all_convex_sets(const ClosureSystem& closure, const Limits& limits = {});

enum class GeometryMode { mkm, antiexchange };

struct AntiexchangeWitness {
  VertexSet convex_set;
  Vertex x;
  Vertex y;
};

/// Outcome of a convex-geometry test. On failure in mkm mode the first convex
/// set (by bit pattern) that is not the hull of its extreme vertices is
/// reported; in antiexchange mode the first (S, x, y) with x in H(S + y) and
/// y in H(S + x).
struct GeometryReport {
  GeometryMode mode = GeometryMode::mkm;
  bool verdict = true;
  std::optional<VertexSet> violating_set;
  std::optional<VertexSet> extremes;
  std::optional<VertexSet> hull_of_extremes;
  std::optional<AntiexchangeWitness> witness;
};

std::string to_string(GeometryMode mode);

GeometryReport is_convex_geometry_mkm(const ClosureSystem& closure, const Limits& limits = {});
GeometryReport is_convex_geometry_mkm(const Graph& g, const ConvexitySpec& c, const Limits& limits = {});

GeometryReport satisfies_antiexchange(const ClosureSystem& closure, const Limits& limits = {});
GeometryReport satisfies_antiexchange(const Graph& g, const ConvexitySpec& c, const Limits& limits = {});

/// Same verdict as satisfies_antiexchange but quantifies over every subset S,
/// replacing it by H(S). Used to cross-check the convex-only formulation.
bool antiexchange_over_all_sets(const ClosureSystem& closure, const Limits& limits = {});

}  // namespace gconvex
