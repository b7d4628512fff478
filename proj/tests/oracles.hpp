// Test-only reference implementations, kept deliberately naive and
// independent of the library's solver paths.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lcc/graph.hpp"

namespace oracles {

// graph6 decoding straight from the published bit layout: header byte(s),
// then the upper triangle in column order, six bits per printable byte.
inline lcc::Graph reference_parse_graph6(const std::string& text) {
  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(text.at(0)) == 126) {
    n = ((text.at(1) - 63) << 12) | ((text.at(2) - 63) << 6) | (text.at(3) - 63);
    pos = 4;
  } else {
    n = text.at(0) - 63;
    pos = 1;
  }
  std::vector<int> bits;
  for (std::size_t i = pos; i < text.size(); ++i) {
    int v = text[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
  }
  lcc::Graph g(n);
  std::size_t idx = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++idx)
      if (bits.at(idx)) g.add_edge(row, col);
  return g;
}

inline std::string reference_emit_graph6(const lcc::Graph& g) {
  std::string out(1, static_cast<char>(g.n() + 63));
  std::vector<int> bits;
  for (int col = 1; col < g.n(); ++col)
    for (int row = 0; row < col; ++row) bits.push_back(g.has_edge(row, col) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[i + static_cast<std::size_t>(b)];
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

inline int oracle_independence(const lcc::Graph& g) {
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
    lcc::VertexSet s(mask);
    if (g.is_independent_set(s)) best = std::max(best, s.count());
  }
  return best;
}

inline bool oracle_colorable(const lcc::Graph& g, int k) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
  for (;;) {
    bool proper = true;
    for (auto [u, v] : g.edges())
      if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
        proper = false;
        break;
      }
    if (proper) return true;
    int pos = 0;
    while (pos < g.n() && color[static_cast<std::size_t>(pos)] == k - 1) {
      color[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == g.n()) return false;
    ++color[static_cast<std::size_t>(pos)];
  }
}

inline int oracle_chromatic(const lcc::Graph& g) {
  if (g.n() == 0) return 0;
  for (int k = 1;; ++k)
    if (oracle_colorable(g, k)) return k;
}

// All cliques on >= 2 vertices, by scanning every vertex subset.
inline std::vector<lcc::VertexSet> brute_cliques(const lcc::Graph& g) {
  std::vector<lcc::VertexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n()); ++mask) {
    lcc::VertexSet s(mask);
    if (s.count() >= 2 && g.is_clique(s)) out.push_back(s);
  }
  return out;
}

// Exhaustive cover search: pick the first uncovered edge, try every clique
// of the global list that contains it and keeps all valencies <= k.
inline bool oracle_lcc_decide(const lcc::Graph& g, int k,
                              const std::vector<lcc::VertexSet>& cliques,
                              std::vector<std::uint64_t>& covered, std::vector<int>& val) {
  int eu = -1, ev = -1;
  for (auto [u, v] : g.edges())
    if (!((covered[static_cast<std::size_t>(u)] >> v) & 1)) {
      eu = u;
      ev = v;
      break;
    }
  if (eu < 0) return true;
  for (const lcc::VertexSet& c : cliques) {
    if (!c.contains(eu) || !c.contains(ev)) continue;
    bool ok = true;
    for (int w : c)
      if (val[static_cast<std::size_t>(w)] + 1 > k) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<std::uint64_t> saved = covered;
    for (int w : c) {
      ++val[static_cast<std::size_t>(w)];
      covered[static_cast<std::size_t>(w)] |= c.without(w).bits();
    }
    if (oracle_lcc_decide(g, k, cliques, covered, val)) return true;
    covered = saved;
    for (int w : c) --val[static_cast<std::size_t>(w)];
  }
  return false;
}

inline int oracle_lcc(const lcc::Graph& g) {
  std::vector<lcc::VertexSet> cliques = brute_cliques(g);
  for (int k = 0;; ++k) {
    std::vector<std::uint64_t> covered(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> val(static_cast<std::size_t>(g.n()), 0);
    if (oracle_lcc_decide(g, k, cliques, covered, val)) return k;
  }
}

// Minimum sigma / clique count over all set partitions of the edge list into
// blocks that are exactly the edge sets of cliques.
struct PartitionOptimum {
  int sigma = 0;
  int count = 0;
};

inline PartitionOptimum oracle_partition(const lcc::Graph& g) {
  const std::vector<std::pair<int, int>> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m == 0) return {0, 0};
  int best_sigma = 2 * m, best_count = m;  // all edges as K_2s is always valid

  std::vector<int> assign(static_cast<std::size_t>(m), 0);
  auto evaluate = [&](int blocks) {
    int sigma = 0;
    for (int b = 0; b < blocks; ++b) {
      lcc::VertexSet span;
      int block_edges = 0;
      for (int i = 0; i < m; ++i)
        if (assign[static_cast<std::size_t>(i)] == b) {
          span.add(edges[static_cast<std::size_t>(i)].first);
          span.add(edges[static_cast<std::size_t>(i)].second);
          ++block_edges;
        }
      if (!g.is_clique(span)) return;
      if (block_edges != span.count() * (span.count() - 1) / 2) return;
      sigma += span.count();
    }
    best_sigma = std::min(best_sigma, sigma);
    best_count = std::min(best_count, blocks);
  };

  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == m) {
      evaluate(blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      assign[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, blocks + (b == blocks ? 1 : 0));
    }
  };
  rec(rec, 0, 0);
  return {best_sigma, best_count};
}

// Maximum edge-disjoint monochromatic triangle packing, DFS over the list of
// monochromatic triples with a remaining-count bound.
inline int oracle_max_triangle_packing(const lcc::Graph& g) {
  struct Triple {
    int a, b, c;
  };
  std::vector<Triple> triples;
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      for (int c = b + 1; c < g.n(); ++c) {
        int present = static_cast<int>(g.has_edge(a, b)) + static_cast<int>(g.has_edge(a, c)) +
                      static_cast<int>(g.has_edge(b, c));
        if (present == 0 || present == 3) triples.push_back({a, b, c});
      }
  std::vector<std::uint64_t> used(static_cast<std::size_t>(g.n()), 0);
  int best = 0;
  auto used_edge = [&](int u, int v) { return (used[static_cast<std::size_t>(u)] >> v) & 1; };
  auto flip = [&](int u, int v) {
    used[static_cast<std::size_t>(u)] ^= std::uint64_t{1} << v;
    used[static_cast<std::size_t>(v)] ^= std::uint64_t{1} << u;
  };
  auto rec = [&](auto&& self, std::size_t i, int taken) -> void {
    best = std::max(best, taken);
    if (i == triples.size()) return;
    if (taken + static_cast<int>(triples.size() - i) <= best) return;
    const Triple& t = triples[i];
    if (!used_edge(t.a, t.b) && !used_edge(t.a, t.c) && !used_edge(t.b, t.c)) {
      flip(t.a, t.b);
      flip(t.a, t.c);
      flip(t.b, t.c);
      self(self, i + 1, taken + 1);
      flip(t.a, t.b);
      flip(t.a, t.c);
      flip(t.b, t.c);
    }
    self(self, i + 1, taken);
  };
  rec(rec, 0, 0);
  return best;
}

inline lcc::Graph random_graph(int n, std::mt19937_64& rng) {
  lcc::Graph g(n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) == 1) g.add_edge(u, v);
  return g;
}

}  // namespace oracles
