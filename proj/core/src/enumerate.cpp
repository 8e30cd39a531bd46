#include "gconvex/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "gconvex/canonical.hpp"
#include "gconvex/errors.hpp"
#include "gconvex/graph_io.hpp"

namespace gconvex {

namespace {

void check_order(int n) {
  if (n < 1) throw InputError("graph enumeration needs at least one vertex");
  if (n > kMaxEnumerationOrder)
    throw CapacityError("graph enumeration is limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
}

std::vector<Graph> sorted_values(std::map<std::string, Graph>& by_key) {
  std::vector<Graph> out;
  out.reserve(by_key.size());
  for (auto& [key, g] : by_key) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> extend(const std::vector<Graph>& smaller, int n) {
  std::map<std::string, Graph> by_key;
  std::array<Mask, kMaxVertices> rows{};
  const Vertex fresh = n - 1;
  for (const Graph& base : smaller) {
    for (Vertex v = 0; v < fresh; ++v) rows[v] = base.row(v);
    for (Mask attach = 1; attach <= full_mask(fresh); ++attach) {
      for (Vertex v = 0; v < fresh; ++v) rows[v] = base.row(v) | ((attach >> v & 1U) ? bit(fresh) : 0);
      rows[fresh] = attach;
      const Graph g = Graph::from_rows(n, std::span<const Mask>(rows.data(), n));
      Graph canon = canonical_graph(g);
      by_key.try_emplace(emit_graph6(canon), std::move(canon));
    }
  }
  return sorted_values(by_key);
}

}  // namespace

std::vector<std::vector<Graph>> connected_graphs_up_to(int max_n) {
  check_order(max_n);
  std::vector<std::vector<Graph>> levels;
  levels.push_back({Graph::complete(1)});
  for (int n = 2; n <= max_n; ++n) levels.push_back(extend(levels.back(), n));
  return levels;
}

std::vector<Graph> connected_graphs(int n) {
  auto levels = connected_graphs_up_to(n);
  return std::move(levels.back());
}

std::vector<Graph> connected_graphs_from_graph6(std::istream& in, const Limits& limits) {
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (Graph& g : read_graph6_stream(in)) {
    if (!is_connected(g)) continue;
    if (seen.insert(canonical_form(g, limits)).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace gconvex
