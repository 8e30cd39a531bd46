#pragma once

#include <string>
#include <vector>

#include "gconvex/graph.hpp"

namespace gconvex {

/// Canonical vertex order: canonical vertex i is original vertex order[i].
///
/// Ordered-partition refinement by neighbour counts, then an
/// individualize-and-refine search over the remaining cells. Branches on
/// twin vertices (equal neighbourhoods outside the pair) are skipped since
/// the transposition is an automorphism.
std::vector<Vertex> canonical_labeling(const Graph& g, const Limits& limits = {});

/// Byte string that is equal for two graphs exactly when they are isomorphic.
std::string canonical_form(const Graph& g, const Limits& limits = {});

Graph canonical_graph(const Graph& g, const Limits& limits = {});

bool isomorphic(const Graph& a, const Graph& b, const Limits& limits = {});

}  // namespace gconvex
