#include "gconvex/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace gconvex {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::size_t packed_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

bool parse_int(std::string_view s, long& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("truncated graph6 string", i);
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", i);
    return c - 63;
  };

  long n = byte_at(pos);
  ++pos;
  if (n == 63) {
    // 126 followed by three 6-bit groups; a second 126 announces the 8-byte form.
    if (byte_at(pos) == 63) {
      for (std::size_t i = pos + 1; i < pos + 7; ++i) byte_at(i);
      throw CapacityError("graph6 order exceeds 258047 vertices");
    }
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos++);
  }
  if (n > kMaxVertices) {
    throw CapacityError("graph6 order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxVertices) + " vertices");
  }

  const std::size_t need = packed_length(static_cast<int>(n));
  if (text.size() < pos + need) throw ParseError("truncated graph6 bit vector", text.size());
  if (text.size() > pos + need) throw ParseError("trailing bytes after graph6 bit vector", pos + need);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = byte_at(pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  std::string packed(packed_length(n), '\0');
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) packed[k / 6] = static_cast<char>(packed[k / 6] | (1 << (5 - k % 6)));
  for (char& c : packed) c = static_cast<char>(c + 63);
  return out + packed;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

Vertex LabeledGraph::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<Vertex>(i);
  throw InputError("unknown vertex label '" + std::string(label) + "'");
}

LabeledGraph parse_edge_list(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    rows.push_back(std::move(tokens));
  }
  if (rows.empty()) throw InputError("edge list is empty");

  long n = 0;
  long m = 0;
  if (rows[0].size() != 2 || !parse_int(rows[0][0], n) || !parse_int(rows[0][1], m) || n < 0 || m < 0) {
    throw InputError("edge list header must be 'n m'");
  }
  if (n > kMaxVertices) throw CapacityError("edge list declares more than 32 vertices");
  if (rows.size() - 1 != static_cast<std::size_t>(m)) {
    throw InputError("edge list header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(rows.size() - 1));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) throw InputError("edge line " + std::to_string(i) + " must have two endpoints");
  }

  bool numeric = true;
  bool all_ints = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (const auto& t : rows[i]) {
      long value = 0;
      if (!parse_int(t, value)) {
        numeric = false;
        all_ints = false;
      } else if (value < 0 || value >= n) {
        numeric = false;
      }
    }
  }

  LabeledGraph out;
  std::vector<Edge> edges;
  if (numeric) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
      long a = 0;
      long b = 0;
      parse_int(rows[i][0], a);
      parse_int(rows[i][1], b);
      edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    out.graph = Graph::from_edge_list(static_cast<int>(n), edges);
    return with_index_labels(out.graph);
  }

  std::vector<std::string> names;
  for (std::size_t i = 1; i < rows.size(); ++i)
    for (const auto& t : rows[i])
      if (std::find(names.begin(), names.end(), t) == names.end()) names.push_back(t);
  if (names.size() > static_cast<std::size_t>(n)) {
    throw InputError("edge list uses " + std::to_string(names.size()) + " labels but declares " +
                     std::to_string(n) + " vertices");
  }
  if (all_ints) {
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
      long x = 0;
      long y = 0;
      parse_int(a, x);
      parse_int(b, y);
      return x < y;
    });
  } else {
    std::sort(names.begin(), names.end());
  }
  std::map<std::string, Vertex> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<Vertex>(i);
  for (std::size_t i = 1; i < rows.size(); ++i) edges.push_back({index[rows[i][0]], index[rows[i][1]]});
  for (auto v = static_cast<long>(names.size()); v < n; ++v) {
    std::string fallback = std::to_string(v);
    while (index.contains(fallback)) fallback += "'";
    names.push_back(fallback);
    index[fallback] = static_cast<Vertex>(v);
  }
  out.graph = Graph::from_edge_list(static_cast<int>(n), edges);
  out.labels = std::move(names);
  return out;
}

LabeledGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (const Edge& e : es) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

LabeledGraph with_index_labels(const Graph& g) {
  LabeledGraph out{g, {}};
  for (int v = 0; v < g.order(); ++v) out.labels.push_back(std::to_string(v));
  return out;
}

}  // namespace gconvex
