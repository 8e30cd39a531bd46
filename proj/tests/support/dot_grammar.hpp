#pragma once

#include <string>
#include <string_view>

namespace dot {

/// Recursive-descent check of the Graphviz DOT language:
///   graph     : [strict] (graph | digraph) [ID] '{' stmt_list '}'
///   stmt      : node_stmt | edge_stmt | attr_stmt | ID '=' ID | subgraph
///   attr_list : '[' [a_list] ']' [attr_list]
/// IDs are identifiers, numerals or double-quoted strings. Edge operators
/// must match the graph kind. Returns an empty string when the text is
/// accepted, otherwise a message with the byte offset.
std::string check(std::string_view text);

}  // namespace dot
