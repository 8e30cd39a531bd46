#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "gconvex/graph.hpp"

namespace gconvex {

/// Parses one graph6 line. A leading ">>graph6<<" header and trailing
/// CR/LF are accepted. Throws ParseError with the offending byte offset,
/// CapacityError for graphs over 32 vertices.
Graph parse_graph6(std::string_view text);

/// graph6 encoding without header or newline.
std::string emit_graph6(const Graph& g);

/// One graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Graph plus a printable name for each vertex.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  /// Index of a label, or InputError.
  Vertex find(std::string_view label) const;
  std::string name(Vertex v) const { return labels.at(v); }
};

/// Edge-list text: a header line "n m" followed by m lines "u v".
///
/// When every endpoint token is an integer in 0..n-1 the integers are the
/// vertices. Otherwise tokens are labels: they are sorted (numerically if all
/// are integers) and numbered in that order; unused vertices get their index
/// as label. Blank lines and lines starting with '#' are skipped.
LabeledGraph parse_edge_list(std::istream& in);
LabeledGraph parse_edge_list(std::string_view text);

std::string emit_edge_list(const Graph& g);

/// Integer labels "0".."n-1".
LabeledGraph with_index_labels(const Graph& g);

}  // namespace gconvex
