#include "lcc/ng_bounds.hpp"

#include <stdexcept>

#include "lcc/invariants.hpp"

namespace lcc {

namespace {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Partition of one color class: its packed triangles plus leftover K_2s.
CliquePartition partition_for_color(const Graph& host, const TrianglePacking& packing,
                                    TriangleColor color) {
  CliquePartition part;
  std::vector<std::uint64_t> covered(static_cast<std::size_t>(host.n()), 0);
  for (const ColoredTriangle& t : packing.triangles) {
    if (t.color != color) continue;
    part.cliques.push_back(Clique{VertexSet::of({t.a, t.b, t.c})});
    covered[static_cast<std::size_t>(t.a)] |= bit(t.b) | bit(t.c);
    covered[static_cast<std::size_t>(t.b)] |= bit(t.a) | bit(t.c);
    covered[static_cast<std::size_t>(t.c)] |= bit(t.a) | bit(t.b);
  }
  for (auto [u, v] : host.edges())
    if (!((covered[static_cast<std::size_t>(u)] >> v) & 1))
      part.cliques.push_back(Clique{VertexSet::of({u, v})});
  for (const Clique& c : part.cliques) part.sigma += c.members.count();
  return part;
}

NgBound build_ng_bound(const Graph& g, bool sigma_mode) {
  NgBound out;
  out.packing = pack_monochromatic_triangles(g);
  Graph comp = complement(g);
  out.partition_g = partition_for_color(g, out.packing, TriangleColor::original);
  out.partition_complement = partition_for_color(comp, out.packing, TriangleColor::complement);

  const long long n = g.n();
  const long long k = out.packing.k;
  if (sigma_mode) {
    out.realized = n * (n - 1) - 3 * k;
    long long sigma_total = out.partition_g.sigma + out.partition_complement.sigma;
    if (sigma_total != out.realized)
      throw std::logic_error("scp accounting identity violated by the built partitions");
  } else {
    out.realized = n * (n - 1) / 2 - 2 * k;
    long long count_total = static_cast<long long>(out.partition_g.cliques.size()) +
                            static_cast<long long>(out.partition_complement.cliques.size());
    if (count_total != out.realized)
      throw std::logic_error("cp accounting identity violated by the built partitions");
  }
  return out;
}

}  // namespace

TrianglePacking pack_monochromatic_triangles(const Graph& g) {
  TrianglePacking packing;
  std::vector<std::uint64_t> used(static_cast<std::size_t>(g.n()), 0);
  auto used_edge = [&used](int u, int v) { return (used[static_cast<std::size_t>(u)] >> v) & 1; };
  auto mark = [&used](int u, int v) {
    used[static_cast<std::size_t>(u)] |= bit(v);
    used[static_cast<std::size_t>(v)] |= bit(u);
  };

  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      for (int c = b + 1; c < g.n(); ++c) {
        int present = static_cast<int>(g.has_edge(a, b)) + static_cast<int>(g.has_edge(a, c)) +
                      static_cast<int>(g.has_edge(b, c));
        if (present != 0 && present != 3) continue;  // not monochromatic
        if (used_edge(a, b) || used_edge(a, c) || used_edge(b, c)) continue;
        mark(a, b);
        mark(a, c);
        mark(b, c);
        packing.triangles.push_back(ColoredTriangle{
            a, b, c, present == 3 ? TriangleColor::original : TriangleColor::complement});
      }
  packing.k = static_cast<int>(packing.triangles.size());
  packing.m = 3 * packing.k;
  return packing;
}

NgBound scp_ng_bound(const Graph& g) { return build_ng_bound(g, /*sigma_mode=*/true); }

NgBound cp_ng_bound(const Graph& g) { return build_ng_bound(g, /*sigma_mode=*/false); }

bool is_balanced_complete_bipartite(const Graph& g) {
  const int n = g.n();
  if (n == 0) return true;
  // In a complete bipartite graph, vertex 0's part is exactly its
  // non-neighborhood.
  VertexSet part_a = g.vertices() - g.neighbors(0);
  VertexSet part_b = g.neighbors(0);
  int small = std::min(part_a.count(), part_b.count());
  if (small != n / 2) return false;
  for (int v : part_a)
    if (!(g.neighbors(v) == part_b)) return false;
  for (int v : part_b)
    if (!(g.neighbors(v) == part_a)) return false;
  return true;
}

NearRegularVerdict check_near_regular(const Graph& g) {
  const int k = g.min_degree();
  if (g.max_degree() > k + 1)
    throw std::invalid_argument("check_near_regular: degrees not within {k, k+1}");
  NearRegularVerdict v;
  v.graph6 = emit_graph6(g);
  v.k = k;
  v.lcc_g = lcc_exact(g).k;
  v.lcc_complement = lcc_exact(complement(g)).k;
  v.bound_g = k + 1;
  v.bound_complement = g.n() - 1 - k;
  v.conj1_holds = v.lcc_g + v.lcc_complement <= g.n();
  v.holds = v.lcc_g <= v.bound_g && v.lcc_complement <= v.bound_complement && v.conj1_holds;
  return v;
}

RatioBoundVerdict check_ratio_bound(const Graph& g) {
  SetWitness omega = clique_number(g);
  if (omega.value < 2)
    throw std::invalid_argument("check_ratio_bound: graph has no edges (omega < 2)");
  const int n = g.n();
  RatioBoundVerdict v;
  v.graph6 = emit_graph6(g);
  int chi = chromatic_number(g).chi;
  v.lhs_den = omega.value - 1;
  v.lhs_num = g.max_degree() + static_cast<long long>(chi) * v.lhs_den;
  v.rhs = n + 1;
  v.inequality_holds = v.lhs_num <= v.rhs * v.lhs_den;
  v.equality = v.lhs_num == v.rhs * v.lhs_den;
  v.is_complete_graph = g.edge_count() == n * (n - 1) / 2;
  if (n >= 2 && g.edge_count() == n - 1) {
    for (int c = 0; c < n; ++c)
      if (g.degree(c) == n - 1) {
        v.is_star = true;
        break;
      }
  }
  v.holds = v.inequality_holds && (v.equality == (v.is_complete_graph || v.is_star));
  return v;
}

AlphaChiVerdict check_alpha_chi_bound(const Graph& g) {
  const int n = g.n();
  AlphaChiVerdict v;
  v.graph6 = emit_graph6(g);
  v.lhs = independence_number(g).value + chromatic_number(g).chi;
  v.rhs = n + 1;
  v.inequality_holds = v.lhs <= v.rhs;
  v.equality = v.lhs == v.rhs;
  for (int w = 0; w < n; ++w) {
    VertexSet nb = g.neighbors(w);
    if (g.is_clique(nb) && g.is_independent_set(g.vertices() - nb)) {
      v.qualifying_vertex = w;
      break;
    }
  }
  v.holds = v.inequality_holds && (v.equality == (v.qualifying_vertex >= 0));
  return v;
}

CorollaryAlphaVerdict check_corollary_alpha(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("check_corollary_alpha: graph has no edges (alpha_L = 0)");
  const long long n = g.n();
  CorollaryAlphaVerdict v;
  v.graph6 = emit_graph6(g);
  v.lcc = lcc_exact(g).k;
  v.alpha_local = local_independence_number(g);
  v.alpha = independence_number(g).value;
  // lcc + n/a <= n+1, cross-multiplied
  const long long local_lhs = v.lcc * static_cast<long long>(v.alpha_local) + n;
  const long long global_lhs = v.lcc * static_cast<long long>(v.alpha) + n;
  v.local_holds = local_lhs <= (n + 1) * v.alpha_local;
  v.global_holds = global_lhs <= (n + 1) * v.alpha;
  v.local_equality = local_lhs == (n + 1) * v.alpha_local;
  v.global_equality = global_lhs == (n + 1) * v.alpha;
  v.holds = v.local_holds && v.global_holds;
  return v;
}

}  // namespace lcc
