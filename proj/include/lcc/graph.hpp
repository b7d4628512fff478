#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcc {

inline constexpr int kMaxVertices = 64;

/// Set of vertex indices in [0, 64), stored as one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  int count() const { return std::popcount(bits_); }
  int lowest() const { return empty() ? -1 : std::countr_zero(bits_); }

  void add(int v) { bits_ |= std::uint64_t{1} << v; }
  void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  VertexSet with(int v) const { return VertexSet(bits_ | std::uint64_t{1} << v); }
  VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

  /// Iterates set members in ascending order.
  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1, adjacency as per-vertex bit
/// masks. No self-loops, symmetric by construction. Treat instances as
/// immutable once built; every operation below returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  VertexSet closed_neighborhood(int v) const { return neighbors(v).with(v); }
  bool has_edge(int u, int v) const { return u != v && neighbors(u).contains(v); }
  int degree(int v) const { return neighbors(v).count(); }
  int edge_count() const;
  int max_degree() const;
  int min_degree() const;
  bool is_clique(VertexSet s) const;
  bool is_independent_set(VertexSet s) const;
  bool has_triangle() const;

  /// Edges as (u, v) pairs with u < v, lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Builder hook; validates range and rejects loops. Not for use after the
  /// graph has been shared.
  void add_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

/// Decodes one graph6 string (short or long size header, n <= 64).
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding; requires n <= 62 (single-byte size header).
std::string emit_graph6(const Graph& g);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;    // new label -> old label
  std::vector<int> from_original;  // old label -> new label, -1 if dropped
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// Same graph plus one isolated vertex with the new highest index.
Graph disjoint_union_with_isolated(const Graph& g);

/// Text format: first line "n m", then m lines "u v" (0-indexed).
Graph parse_edge_list(std::istream& in);

/// One graph6 string per line; blank lines and a leading ">>graph6<<" marker
/// are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace lcc
