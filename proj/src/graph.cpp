#include "lcc/graph.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace lcc {

namespace {

constexpr int kG6Offset = 63;  // printable range starts at '?'

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) fail("graph order must be in [0, 64]");
  adj_.assign(static_cast<std::size_t>(n), 0);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s)
    if (!s.without(v).subset_of(neighbors(v))) return false;
  return true;
}

bool Graph::is_independent_set(VertexSet s) const {
  for (int v : s)
    if (neighbors(v).intersects(s)) return false;
  return true;
}

bool Graph::has_triangle() const {
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u)) {
      if (v <= u) continue;
      if ((neighbors(u) & neighbors(v)).count() > 0) return true;
    }
  return false;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (v > u) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) fail("edge endpoint out of range");
  if (u == v) fail("self-loops are not allowed");
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kMarker = ">>graph6<<";
  if (text.substr(0, kMarker.size()) == kMarker) text.remove_prefix(kMarker.size());
  if (text.empty()) fail("graph6: empty input");

  auto value_at = [&](std::size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) fail("graph6: character out of printable range");
    return c - kG6Offset;
  };

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] == 126) {  // '~' introduces a multi-byte order
    if (text.size() >= 2 && text[1] == 126) {
      // 8-byte form encodes n >= 258048, far beyond the 64-vertex capacity.
      fail("graph6: n exceeds 64-vertex capacity");
    }
    if (text.size() < 4) fail("graph6: truncated size header");
    n = (static_cast<long long>(value_at(1)) << 12) |
        (static_cast<long long>(value_at(2)) << 6) | value_at(3);
    pos = 4;
  } else {
    n = value_at(0);
    pos = 1;
  }
  if (n > kMaxVertices) fail("graph6: n exceeds 64-vertex capacity");

  const long long bit_count = n * (n - 1) / 2;
  const std::size_t payload = static_cast<std::size_t>((bit_count + 5) / 6);
  if (text.size() - pos < payload) fail("graph6: truncated bit payload");
  if (text.size() - pos > payload) fail("graph6: trailing data after payload");

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int word = value_at(pos + static_cast<std::size_t>(bit / 6));
      if ((word >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  // Padding bits in the last payload byte must be zero.
  if (bit_count % 6 != 0) {
    int last = value_at(pos + payload - 1);
    if (last & ((1 << (6 - bit_count % 6)) - 1)) fail("graph6: nonzero padding bits");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.n();
  if (n > 62) fail("graph6 emit: n out of single-byte header range (n <= 62)");
  std::string out;
  out.push_back(static_cast<char>(n + kG6Offset));
  int word = 0, filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      word = (word << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kG6Offset));
        word = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kG6Offset));
  return out;
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  InducedSubgraph out;
  out.from_original.assign(static_cast<std::size_t>(g.n()), -1);
  for (int v : s) {
    if (v >= g.n()) fail("induced_subgraph: vertex out of range");
    out.from_original[static_cast<std::size_t>(v)] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  }
  out.graph = Graph(static_cast<int>(out.to_original.size()));
  for (int v : s)
    for (int u : g.neighbors(v) & s)
      if (u > v)
        out.graph.add_edge(out.from_original[static_cast<std::size_t>(u)],
                           out.from_original[static_cast<std::size_t>(v)]);
  return out;
}

Graph disjoint_union_with_isolated(const Graph& g) {
  if (g.n() >= kMaxVertices) fail("disjoint_union_with_isolated: 64-vertex capacity reached");
  Graph h(g.n() + 1);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  return h;
}

Graph parse_edge_list(std::istream& in) {
  int n = 0;
  long long m = 0;
  if (!(in >> n >> m)) fail("edge list: expected header line \"n m\"");
  if (m < 0) fail("edge list: negative edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) fail("edge list: truncated edge lines");
    edges.emplace_back(u, v);
  }
  return from_edge_list(n, edges);
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace lcc
