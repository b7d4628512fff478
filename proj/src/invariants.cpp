#include "lcc/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lcc {

namespace {

// Branch on a highest-degree candidate (include/exclude), greedy seed as the
// incumbent so the search only records strict improvements.
struct MisSearch {
  const Graph& g;
  int best = 0;
  VertexSet best_set;

  explicit MisSearch(const Graph& graph) : g(graph) {}

  SetWitness run(VertexSet cand) {
    VertexSet greedy;
    for (int v : cand)
      if (!g.neighbors(v).intersects(greedy)) greedy.add(v);
    best = greedy.count();
    best_set = greedy;
    dfs(cand, VertexSet{});
    return {best, best_set};
  }

  void dfs(VertexSet cand, VertexSet chosen) {
    // Vertices with no neighbor among the candidates always join.
    VertexSet free;
    for (int v : cand)
      if (!g.neighbors(v).intersects(cand)) free.add(v);
    chosen = chosen | free;
    cand = cand - free;

    if (chosen.count() + cand.count() <= best) return;
    if (cand.empty()) {
      best = chosen.count();
      best_set = chosen;
      return;
    }
    int pick = -1, deg = -1;
    for (int v : cand) {
      int d = (g.neighbors(v) & cand).count();
      if (d > deg) {
        deg = d;
        pick = v;
      }
    }
    dfs(cand - g.closed_neighborhood(pick), chosen.with(pick));
    dfs(cand.without(pick), chosen);
  }
};

struct KColoring {
  const Graph& g;
  int k;
  std::vector<int> order;
  std::vector<int> color;

  bool extend(std::size_t pos, int max_used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    std::uint64_t used = 0;
    for (int u : g.neighbors(v))
      if (color[static_cast<std::size_t>(u)] >= 0)
        used |= std::uint64_t{1} << color[static_cast<std::size_t>(u)];
    int cap = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= cap; ++c) {
      if ((used >> c) & 1) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (extend(pos + 1, std::max(max_used, c))) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

}  // namespace

SetWitness independence_number(const Graph& g) {
  return MisSearch(g).run(g.vertices());
}

SetWitness independence_number_within(const Graph& g, VertexSet candidates) {
  return MisSearch(g).run(candidates);
}

SetWitness clique_number(const Graph& g) {
  return independence_number(complement(g));
}

Coloring chromatic_number(const Graph& g) {
  const int n = g.n();
  Coloring out;
  out.color.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return out;

  // Greedy upper bound in index order.
  std::vector<int> greedy(static_cast<std::size_t>(n), -1);
  int ub = 0;
  for (int v = 0; v < n; ++v) {
    std::uint64_t used = 0;
    for (int u : g.neighbors(v))
      if (greedy[static_cast<std::size_t>(u)] >= 0)
        used |= std::uint64_t{1} << greedy[static_cast<std::size_t>(u)];
    int c = std::countr_one(used);
    greedy[static_cast<std::size_t>(v)] = c;
    ub = std::max(ub, c + 1);
  }

  SetWitness clique = clique_number(g);
  int lb = std::max(clique.value, 1);
  for (int k = lb; k < ub; ++k) {
    KColoring search{g, k, {}, std::vector<int>(static_cast<std::size_t>(n), -1)};
    search.order.reserve(static_cast<std::size_t>(n));
    int next = 0;
    for (int v : clique.witness) {
      search.color[static_cast<std::size_t>(v)] = next++;
      search.order.push_back(v);
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!clique.witness.contains(v)) rest.push_back(v);
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    search.order.insert(search.order.end(), rest.begin(), rest.end());
    if (search.extend(static_cast<std::size_t>(next), next - 1)) {
      out.chi = k;
      out.color = std::move(search.color);
      return out;
    }
  }
  out.chi = ub;
  out.color = std::move(greedy);
  return out;
}

int local_alpha(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::invalid_argument("local_alpha: vertex out of range");
  return independence_number_within(g, g.neighbors(v)).value;
}

int local_independence_number(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v) best = std::max(best, local_alpha(g, v));
  return best;
}

std::optional<Claw> find_claw(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    const std::vector<int> nb = g.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (std::size_t l = j + 1; l < nb.size(); ++l) {
          if (g.has_edge(nb[i], nb[l]) || g.has_edge(nb[j], nb[l])) continue;
          return Claw{v, VertexSet::of({nb[i], nb[j], nb[l]})};
        }
      }
  }
  return std::nullopt;
}

bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

std::vector<VertexSet> vertex_clique_partition(const Graph& g, VertexSet s) {
  InducedSubgraph sub = induced_subgraph(g, s);
  Coloring col = chromatic_number(complement(sub.graph));
  std::vector<VertexSet> parts(static_cast<std::size_t>(col.chi));
  for (int v = 0; v < sub.graph.n(); ++v)
    parts[static_cast<std::size_t>(col.color[static_cast<std::size_t>(v)])].add(
        sub.to_original[static_cast<std::size_t>(v)]);
  return parts;
}

std::vector<std::pair<int, int>> maximum_matching(const Graph& g) {
  std::unordered_map<std::uint64_t, int> memo;
  auto rec = [&](auto&& self, std::uint64_t s) -> int {
    if (s == 0) return 0;
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    int v = std::countr_zero(s);
    std::uint64_t rest = s & (s - 1);
    int best = self(self, rest);  // leave v unmatched
    for (std::uint64_t m = g.neighbors(v).bits() & s; m; m &= m - 1) {
      int u = std::countr_zero(m);
      best = std::max(best, 1 + self(self, rest & ~(std::uint64_t{1} << u)));
    }
    memo.emplace(s, best);
    return best;
  };

  std::uint64_t s = g.vertices().bits();
  rec(rec, s);

  // Walk the memo table back to a concrete matching, matching the lowest
  // vertex to its lowest feasible partner.
  std::vector<std::pair<int, int>> out;
  while (s != 0) {
    int target = rec(rec, s);
    int v = std::countr_zero(s);
    std::uint64_t rest = s & (s - 1);
    bool matched = false;
    for (std::uint64_t m = g.neighbors(v).bits() & s; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (1 + rec(rec, rest & ~(std::uint64_t{1} << u)) == target) {
        out.emplace_back(v, u);
        s = rest & ~(std::uint64_t{1} << u);
        matched = true;
        break;
      }
    }
    if (!matched) s = rest;
  }
  return out;
}

}  // namespace lcc
