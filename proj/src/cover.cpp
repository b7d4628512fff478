#include "lcc/cover.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcc/invariants.hpp"

namespace lcc {

namespace {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Bits strictly above position v.
inline std::uint64_t above(int v) { return ~((bit(v) << 1) - 1); }

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

void gen_cliques(const Graph& g, std::uint64_t cand, std::uint64_t current,
                 std::vector<VertexSet>& out) {
  out.push_back(VertexSet(current));
  for (std::uint64_t m = cand; m; m &= m - 1) {
    int v = std::countr_zero(m);
    gen_cliques(g, cand & g.neighbors(v).bits() & above(v), current | bit(v), out);
  }
}

// Candidate cliques through edge (u, v): every clique of the common
// neighborhood, extended by {u, v}. Not only maximal ones; enlarging a clique
// raises the valency of the added vertices, so maximality is not without
// loss of generality here. Largest candidates first.
std::vector<VertexSet> cliques_through_edge(const Graph& g, int u, int v,
                                            std::uint64_t common) {
  std::vector<VertexSet> subsets;
  gen_cliques(g, common, 0, subsets);
  for (VertexSet& s : subsets) s = VertexSet(s.bits() | bit(u) | bit(v));
  std::sort(subsets.begin(), subsets.end(), [](VertexSet a, VertexSet b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a.bits() < b.bits();
  });
  return subsets;
}

struct LccSolver {
  const Graph& g;
  int k;
  int per_clique_cap;  // omega - 1: edges one more clique can cover at a vertex
  std::vector<int> val;
  std::vector<std::uint64_t> uncovered;
  std::vector<Clique> chosen;
  std::vector<Clique>* witness;

  bool dfs() {
    int u = -1;
    for (int w = 0; w < g.n(); ++w)
      if (uncovered[static_cast<std::size_t>(w)]) {
        u = w;
        break;
      }
    if (u < 0) {
      if (witness) *witness = chosen;
      return true;
    }
    // Valency budget: each further clique at w covers at most omega-1 of its
    // uncovered edges.
    for (int w = u; w < g.n(); ++w) {
      std::uint64_t rem = uncovered[static_cast<std::size_t>(w)];
      if (!rem) continue;
      if (val[static_cast<std::size_t>(w)] + ceil_div(std::popcount(rem), per_clique_cap) > k)
        return false;
    }
    int v = std::countr_zero(uncovered[static_cast<std::size_t>(u)]);
    std::uint64_t common = g.neighbors(u).bits() & g.neighbors(v).bits();
    for (VertexSet c : cliques_through_edge(g, u, v, common)) {
      bool budget_ok = true;
      for (int w : c)
        if (val[static_cast<std::size_t>(w)] >= k) {
          budget_ok = false;
          break;
        }
      if (!budget_ok) continue;

      std::vector<std::pair<int, int>> newly_covered;
      for (int a : c) {
        ++val[static_cast<std::size_t>(a)];
        for (int b : c) {
          if (b <= a) continue;
          if (uncovered[static_cast<std::size_t>(a)] & bit(b)) {
            uncovered[static_cast<std::size_t>(a)] &= ~bit(b);
            uncovered[static_cast<std::size_t>(b)] &= ~bit(a);
            newly_covered.emplace_back(a, b);
          }
        }
      }
      chosen.push_back(Clique{c});
      if (dfs()) return true;
      chosen.pop_back();
      for (int a : c) --val[static_cast<std::size_t>(a)];
      for (auto [a, b] : newly_covered) {
        uncovered[static_cast<std::size_t>(a)] |= bit(b);
        uncovered[static_cast<std::size_t>(b)] |= bit(a);
      }
    }
    return false;
  }
};

// Shared branch-and-bound over clique partitions of the edge set. Minimizes
// sigma (sum of sizes) or the clique count.
struct PartitionSolver {
  const Graph& g;
  bool sigma_mode;
  int omega;
  std::vector<std::uint64_t> unused;
  int remaining = 0;
  int cost = 0;
  int best_cost = 0;
  std::vector<Clique> current, best;

  int lower_bound(int rem) const {
    if (rem == 0) return 0;
    // A clique of size s spends s (or 1) to cover s(s-1)/2 edges.
    if (sigma_mode) return ceil_div(2 * rem, omega - 1);
    return ceil_div(2 * rem, omega * (omega - 1));
  }

  void dfs() {
    if (remaining == 0) {
      if (cost < best_cost) {
        best_cost = cost;
        best = current;
      }
      return;
    }
    if (cost + lower_bound(remaining) >= best_cost) return;
    int u = -1;
    for (int w = 0; w < g.n(); ++w)
      if (unused[static_cast<std::size_t>(w)]) {
        u = w;
        break;
      }
    int v = std::countr_zero(unused[static_cast<std::size_t>(u)]);

    // Candidate blocks: cliques through (u, v) whose edges are all unused.
    std::vector<VertexSet> subsets;
    std::uint64_t pool = unused[static_cast<std::size_t>(u)] & unused[static_cast<std::size_t>(v)];
    gen_unused_cliques(pool, 0, subsets);
    for (VertexSet& s : subsets) s = VertexSet(s.bits() | bit(u) | bit(v));
    std::sort(subsets.begin(), subsets.end(), [](VertexSet a, VertexSet b) {
      if (a.count() != b.count()) return a.count() > b.count();
      return a.bits() < b.bits();
    });

    for (VertexSet c : subsets) {
      int size = c.count();
      int edges_inside = size * (size - 1) / 2;
      for (int a : c)
        for (int b : c) {
          if (b <= a) continue;
          unused[static_cast<std::size_t>(a)] &= ~bit(b);
          unused[static_cast<std::size_t>(b)] &= ~bit(a);
        }
      remaining -= edges_inside;
      cost += sigma_mode ? size : 1;
      current.push_back(Clique{c});
      dfs();
      current.pop_back();
      cost -= sigma_mode ? size : 1;
      remaining += edges_inside;
      for (int a : c)
        for (int b : c) {
          if (b <= a) continue;
          unused[static_cast<std::size_t>(a)] |= bit(b);
          unused[static_cast<std::size_t>(b)] |= bit(a);
        }
    }
  }

  // Like gen_cliques but against the unused-edge masks, so every pair inside
  // a candidate is both adjacent and still unpartitioned.
  void gen_unused_cliques(std::uint64_t cand, std::uint64_t cur, std::vector<VertexSet>& out) {
    out.push_back(VertexSet(cur));
    for (std::uint64_t m = cand; m; m &= m - 1) {
      int v = std::countr_zero(m);
      gen_unused_cliques(cand & unused[static_cast<std::size_t>(v)] & above(v), cur | bit(v), out);
    }
  }
};

CliquePartition run_partition_solver(const Graph& g, bool sigma_mode) {
  if (g.n() > 8)
    throw std::invalid_argument("exact clique partition solvers are guarded to n <= 8");
  const int m = g.edge_count();
  PartitionSolver solver{g, sigma_mode, std::max(clique_number(g).value, 2), {}, m, 0, 0, {}, {}};
  solver.unused.reserve(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) solver.unused.push_back(g.neighbors(v).bits());
  // Incumbent: every edge as a K_2.
  for (auto [u, v] : g.edges()) solver.best.push_back(Clique{VertexSet::of({u, v})});
  solver.best_cost = sigma_mode ? 2 * m : m;
  solver.dfs();

  CliquePartition out;
  out.cliques = std::move(solver.best);
  for (const Clique& c : out.cliques) out.sigma += c.members.count();
  return out;
}

}  // namespace

CliqueCover make_cover(const Graph& g, std::vector<Clique> cliques) {
  CliqueCover cover;
  cover.cliques = std::move(cliques);
  cover.valency.assign(static_cast<std::size_t>(g.n()), 0);
  for (const Clique& c : cover.cliques)
    for (int v : c.members) ++cover.valency[static_cast<std::size_t>(v)];
  return cover;
}

int max_valency(const CliqueCover& cover) {
  int best = 0;
  for (int v : cover.valency) best = std::max(best, v);
  return best;
}

CoverCheck validate_cover(const Graph& g, const CliqueCover& cover) {
  CoverCheck check;
  check.valency.assign(static_cast<std::size_t>(g.n()), 0);
  std::vector<std::uint64_t> covered(static_cast<std::size_t>(g.n()), 0);
  bool structural_ok = true;

  for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
    VertexSet members = cover.cliques[i].members;
    if (members.empty() || !members.subset_of(g.vertices())) {
      if (structural_ok) check.offending_clique = static_cast<int>(i);
      structural_ok = false;
      continue;
    }
    for (int v : members) {
      ++check.valency[static_cast<std::size_t>(v)];
      VertexSet missing = members.without(v) - g.neighbors(v);
      if (!missing.empty() && structural_ok) {
        check.offending_clique = static_cast<int>(i);
        check.missing_pair = {v, missing.lowest()};
        structural_ok = false;
      }
      covered[static_cast<std::size_t>(v)] |= members.without(v).bits();
    }
  }
  bool all_covered = true;
  for (int u = 0; u < g.n() && all_covered; ++u) {
    std::uint64_t miss = g.neighbors(u).bits() & ~covered[static_cast<std::size_t>(u)];
    if (miss) {
      check.uncovered_edge = {u, std::countr_zero(miss)};
      all_covered = false;
    }
  }
  check.max_valency = 0;
  for (int v : check.valency) check.max_valency = std::max(check.max_valency, v);
  check.valency_consistent = (check.valency == cover.valency);
  check.valid = structural_ok && all_covered;
  return check;
}

std::vector<VertexSet> all_cliques(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  gen_cliques(g, within.bits(), 0, out);
  return out;
}

bool lcc_decide(const Graph& g, int k, std::vector<Clique>* witness) {
  if (k < 0) throw std::invalid_argument("lcc_decide: k must be nonnegative");
  if (g.edge_count() == 0) {
    if (witness) witness->clear();
    return true;
  }
  if (k == 0) return false;
  LccSolver solver{g,
                   k,
                   std::max(clique_number(g).value - 1, 1),
                   std::vector<int>(static_cast<std::size_t>(g.n()), 0),
                   {},
                   {},
                   witness};
  solver.uncovered.reserve(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) solver.uncovered.push_back(g.neighbors(v).bits());
  return solver.dfs();
}

LccResult lcc_exact(const Graph& g) {
  if (g.edge_count() == 0) return {0, make_cover(g, {})};
  int omega = clique_number(g).value;
  int lb = std::max(local_independence_number(g), ceil_div(g.max_degree(), omega - 1));
  int ub = g.max_degree();  // all edges as K_2 cliques
  for (int k = std::max(lb, 1); k <= ub; ++k) {
    std::vector<Clique> witness;
    if (lcc_decide(g, k, &witness)) return {k, make_cover(g, std::move(witness))};
  }
  throw std::logic_error("lcc_exact: search exceeded the max-degree upper bound");
}

PartitionCheck validate_partition(const Graph& g, const CliquePartition& p) {
  PartitionCheck check;
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(g.n()), 0);
  bool ok = true;
  int sigma = 0;

  for (std::size_t i = 0; i < p.cliques.size(); ++i) {
    VertexSet members = p.cliques[i].members;
    sigma += members.count();
    if (members.empty() || !members.subset_of(g.vertices())) {
      if (ok) check.offending_clique = static_cast<int>(i);
      ok = false;
      continue;
    }
    for (int v : members) {
      VertexSet missing = members.without(v) - g.neighbors(v);
      if (!missing.empty() && ok) {
        check.offending_clique = static_cast<int>(i);
        check.missing_pair = {v, missing.lowest()};
        ok = false;
      }
      std::uint64_t repeat = seen[static_cast<std::size_t>(v)] & members.without(v).bits();
      if (repeat && ok) {
        check.offending_clique = static_cast<int>(i);
        check.repeated_edge = {v, std::countr_zero(repeat)};
        ok = false;
      }
    }
    for (int v : members) seen[static_cast<std::size_t>(v)] |= members.without(v).bits();
  }
  for (int u = 0; u < g.n() && ok; ++u) {
    std::uint64_t miss = g.neighbors(u).bits() & ~seen[static_cast<std::size_t>(u)];
    if (miss) {
      check.uncovered_edge = {u, std::countr_zero(miss)};
      ok = false;
    }
  }
  check.sigma_consistent = (sigma == p.sigma);
  check.valid = ok;
  return check;
}

ScpResult scp_exact(const Graph& g) {
  CliquePartition p = run_partition_solver(g, /*sigma_mode=*/true);
  return {p.sigma, std::move(p)};
}

CpResult cp_exact(const Graph& g) {
  CliquePartition p = run_partition_solver(g, /*sigma_mode=*/false);
  return {static_cast<int>(p.cliques.size()), std::move(p)};
}

std::string_view bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::alpha2: return "alpha2";
    case BoundKind::max_clique: return "max-clique";
    case BoundKind::local_alpha: return "local-alpha";
    case BoundKind::claw_free: return "claw-free";
    case BoundKind::exact: return "exact";
  }
  return "unknown";
}

}  // namespace lcc
