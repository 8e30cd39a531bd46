#pragma once

#include <functional>
#include <istream>
#include <vector>

#include "gconvex/graph.hpp"

namespace gconvex {

inline constexpr int kMaxEnumerationOrder = 9;

/// One representative per isomorphism class of connected graphs on n
/// vertices (1 <= n <= 9), each in canonical labelling and sorted by its
/// graph6 string. Built by attaching a new vertex to every connected graph
/// on n - 1 vertices in every possible way, then deduplicating.
/// Throws CapacityError for n > 9 and InputError for n < 1.
std::vector<Graph> connected_graphs(int n);

/// connected_graphs(1) .. connected_graphs(max_n), index i holding order i + 1.
/// Cheaper than calling connected_graphs repeatedly since each level feeds the next.
std::vector<std::vector<Graph>> connected_graphs_up_to(int max_n);

/// Graphs from a graph6 stream (one per line), keeping only the connected ones
/// and dropping isomorphic repeats. Lets an external generator stand in for
/// the built-in one.
std::vector<Graph> connected_graphs_from_graph6(std::istream& in, const Limits& limits = {});

}  // namespace gconvex
