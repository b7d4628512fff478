#include "lcc/constructions.hpp"

#include <algorithm>
#include <string>

namespace lcc {

namespace {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::vector<Clique> lift(std::vector<Clique> cover, const std::vector<int>& to_original) {
  for (Clique& c : cover) {
    VertexSet mapped;
    for (int v : c.members) mapped.add(to_original[static_cast<std::size_t>(v)]);
    c.members = mapped;
  }
  return cover;
}

// Accumulates cliques and tracks which vertex pairs they already cover.
struct CoverBuilder {
  const Graph& g;
  std::vector<Clique> cliques;
  std::vector<std::uint64_t> covered;

  explicit CoverBuilder(const Graph& graph)
      : g(graph), covered(static_cast<std::size_t>(graph.n()), 0) {}

  void add(VertexSet members) {
    cliques.push_back(Clique{members});
    for (int v : members)
      covered[static_cast<std::size_t>(v)] |= members.without(v).bits();
  }

  bool covers(int u, int v) const {
    return (covered[static_cast<std::size_t>(u)] >> v) & 1;
  }

  void add_uncovered_edges_as_pairs() {
    for (auto [u, v] : g.edges())
      if (!covers(u, v)) add(VertexSet::of({u, v}));
  }
};

CoverCertificate make_certificate(const Graph& g, BoundKind kind, int bound,
                                  std::vector<Clique> cliques) {
  CoverCertificate cert;
  cert.kind = kind;
  cert.bound = bound;
  cert.cover = make_cover(g, std::move(cliques));
  CoverCheck check = validate_cover(g, cert.cover);
  cert.verdict = check.valid && check.max_valency <= bound;
  return cert;
}

std::vector<VertexSet> maximal_cliques_with_edge(const Graph& g) {
  std::vector<VertexSet> all = all_cliques(g, g.vertices());
  std::vector<VertexSet> out;
  for (VertexSet c : all) {
    if (c.count() < 2) continue;
    bool maximal = true;
    for (VertexSet d : all)
      if (!(d == c) && c.subset_of(d)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return out;
}

// Pairs from a maximum matching of g[s], then the unmatched vertices as
// singletons. Unmatched vertices of a maximum matching are independent, so
// the singleton count is at most alpha(g[s]).
std::vector<VertexSet> matching_partition(const Graph& g, VertexSet s) {
  InducedSubgraph sub = induced_subgraph(g, s);
  std::vector<VertexSet> parts;
  VertexSet matched;
  for (auto [a, b] : maximum_matching(sub.graph)) {
    parts.push_back(VertexSet::of({sub.to_original[static_cast<std::size_t>(a)],
                                   sub.to_original[static_cast<std::size_t>(b)]}));
    matched.add(a);
    matched.add(b);
  }
  for (int v = 0; v < sub.graph.n(); ++v)
    if (!matched.contains(v))
      parts.push_back(VertexSet::single(sub.to_original[static_cast<std::size_t>(v)]));
  return parts;
}

// Recursive core of the local-alpha construction: remove the first edge's
// endpoints, cover the rest inductively, then reattach x and y in four steps.
std::vector<Clique> local_alpha_cliques(const Graph& g) {
  if (g.edge_count() == 0) return {};
  if (g.n() <= 3) {
    std::vector<Clique> base;
    for (VertexSet c : maximal_cliques_with_edge(g)) base.push_back(Clique{c});
    return base;
  }
  auto [x, y] = g.edges().front();
  InducedSubgraph rest = induced_subgraph(g, g.vertices() - VertexSet::of({x, y}));
  std::vector<Clique> cover = lift(local_alpha_cliques(rest.graph), rest.to_original);

  const VertexSet n1 = g.neighbors(x) - g.closed_neighborhood(y);
  const VertexSet n2 = g.neighbors(y) - g.closed_neighborhood(x);
  const VertexSet n12 = g.neighbors(x) & g.neighbors(y);

  // Step 1: a vertex u near the pair with alpha_G(u) = 1 and a neighbor left
  // in G' is covered by exactly one clique there, namely N_{G'}[u]; extend
  // that clique by x, y, or both so u's valency stays 1. Extensions are
  // collected against the untouched inductive cover first, since several
  // such vertices can share one clique.
  std::vector<VertexSet> extension(cover.size());
  for (int u : n1 | n2 | n12) {
    if (local_alpha(g, u) != 1) continue;
    VertexSet residual_nb = g.neighbors(u) - VertexSet::of({x, y});
    if (residual_nb.empty()) continue;
    int found = -1;
    for (std::size_t i = 0; i < cover.size(); ++i) {
      if (!cover[i].members.contains(u)) continue;
      if (found >= 0)
        throw std::logic_error("local-alpha step 1: covering clique for a simplicial vertex is not unique");
      found = static_cast<int>(i);
    }
    if (found < 0)
      throw std::logic_error("local-alpha step 1: simplicial vertex missing from the inductive cover");
    if (!(cover[static_cast<std::size_t>(found)].members == residual_nb.with(u)))
      throw std::logic_error("local-alpha step 1: inductive clique differs from the closed neighborhood");
    if (n1.contains(u) || n12.contains(u)) extension[static_cast<std::size_t>(found)].add(x);
    if (n2.contains(u) || n12.contains(u)) extension[static_cast<std::size_t>(found)].add(y);
  }
  for (std::size_t i = 0; i < extension.size(); ++i) {
    if (extension[i].empty()) continue;
    VertexSet extended = cover[i].members | extension[i];
    if (!g.is_clique(extended))
      throw std::logic_error("local-alpha step 1: extension is not a clique");
    cover[i].members = extended;
  }

  // Step 2: when one endpoint is simplicial, its closed neighborhood covers
  // all of its edges in one clique.
  const int ax = local_alpha(g, x);
  const int ay = local_alpha(g, y);
  VertexSet closed;
  if (ax == 1)
    closed = g.closed_neighborhood(x);
  else if (ay == 1)
    closed = g.closed_neighborhood(y);
  if (!closed.empty()) {
    bool present = false;
    for (const Clique& c : cover)
      if (c.members == closed) {
        present = true;
        break;
      }
    if (!present) cover.push_back(Clique{closed});
  }

  // Step 3: leftover pair edges, matched two at a time where possible.
  auto covers = [&cover](int a, int b) {
    for (const Clique& c : cover)
      if (c.members.contains(a) && c.members.contains(b)) return true;
    return false;
  };
  VertexSet n1_left, n2_left, n12_left;
  for (int v : n1)
    if (!covers(x, v)) n1_left.add(v);
  for (int v : n2)
    if (!covers(y, v)) n2_left.add(v);
  for (int v : n12)
    if (!covers(x, v) || !covers(y, v)) n12_left.add(v);
  for (VertexSet part : matching_partition(g, n1_left)) cover.push_back(Clique{part.with(x)});
  for (VertexSet part : matching_partition(g, n2_left)) cover.push_back(Clique{part.with(y)});
  for (VertexSet part : matching_partition(g, n12_left))
    cover.push_back(Clique{part.with(x).with(y)});

  // Step 4: the pair edge itself, if nothing above caught it.
  if (!covers(x, y)) cover.push_back(Clique{VertexSet::of({x, y})});
  return cover;
}

VertexSet first_independent_triple(const Graph& g) {
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b) {
      if (g.has_edge(a, b)) continue;
      for (int c = b + 1; c < g.n(); ++c)
        if (!g.has_edge(a, c) && !g.has_edge(b, c)) return VertexSet::of({a, b, c});
    }
  throw std::logic_error("no independent triple although alpha >= 3");
}

std::vector<Clique> claw_free_cliques(const Graph& g) {
  if (g.edge_count() == 0) return {};
  if (g.n() <= 4) return lcc_exact(g).cover.cliques;

  SetWitness alpha = independence_number(g);
  if (alpha.value == 1) return {Clique{g.vertices()}};

  if (alpha.value >= 3) {
    VertexSet triple = first_independent_triple(g);
    InducedSubgraph rest = induced_subgraph(g, g.vertices() - triple);
    std::vector<Clique> cover = lift(claw_free_cliques(rest.graph), rest.to_original);
    for (int x : g.vertices() - triple)
      if ((g.neighbors(x) & triple).count() > 2)
        throw std::logic_error("claw-free construction: vertex adjacent to all of an independent triple");
    for (int u : triple)
      for (VertexSet part : vertex_clique_partition(g, g.neighbors(u)))
        cover.push_back(Clique{part.with(u)});
    return cover;
  }

  // alpha == 2
  Coloring chi = chromatic_number(g);
  SetWitness omega = clique_number(g);
  if (chi.chi == omega.value) return cover_max_clique(g).cover.cliques;

  SplitPair sp = find_split_pair(g);
  VertexSet pair = VertexSet::of({sp.u1, sp.u2});
  InducedSubgraph rest = induced_subgraph(g, g.vertices() - pair);
  std::vector<Clique> cover = lift(claw_free_cliques(rest.graph), rest.to_original);

  VertexSet n1 = g.neighbors(sp.u1) - g.closed_neighborhood(sp.u2);
  VertexSet n2 = g.neighbors(sp.u2) - g.closed_neighborhood(sp.u1);
  VertexSet n12 = g.neighbors(sp.u1) & g.neighbors(sp.u2);
  if (!n1.empty()) cover.push_back(Clique{n1.with(sp.u1)});
  if (!n2.empty()) cover.push_back(Clique{n2.with(sp.u2)});
  if (n12.empty()) {
    cover.push_back(Clique{pair});
  } else {
    for (VertexSet part : vertex_clique_partition(g, n12))
      cover.push_back(Clique{part | pair});
  }
  return cover;
}

}  // namespace

CoverCertificate cover_alpha2(const Graph& g) {
  SetWitness alpha = independence_number(g);
  if (alpha.value != 2)
    throw std::invalid_argument("cover_alpha2 requires alpha(g) = 2, got alpha = " +
                                std::to_string(alpha.value));
  int v = 0;
  for (int w = 1; w < g.n(); ++w)
    if (g.degree(w) < g.degree(v)) v = w;
  const VertexSet non_neighbors = g.vertices() - g.closed_neighborhood(v);

  CoverBuilder builder(g);
  for (int u : g.neighbors(v)) {
    VertexSet c = (g.neighbors(u) & non_neighbors).with(u);
    if (c.count() >= 2) builder.add(c);
  }
  if (non_neighbors.count() >= 2) builder.add(non_neighbors);
  builder.add_uncovered_edges_as_pairs();
  return make_certificate(g, BoundKind::alpha2, g.min_degree() + 1, std::move(builder.cliques));
}

CoverCertificate cover_max_clique(const Graph& g) {
  SetWitness omega = clique_number(g);
  CoverBuilder builder(g);
  for (int v : g.vertices() - omega.witness) {
    VertexSet c = (g.neighbors(v) & omega.witness).with(v);
    if (c.count() >= 2) builder.add(c);
  }
  if (omega.witness.count() >= 2) builder.add(omega.witness);
  builder.add_uncovered_edges_as_pairs();
  return make_certificate(g, BoundKind::max_clique, g.n() + 1 - omega.value,
                          std::move(builder.cliques));
}

CoverCertificate cover_local_alpha(const Graph& g) {
  const int n = g.n();
  CoverCertificate cert;
  cert.kind = BoundKind::local_alpha;
  cert.cover = make_cover(g, local_alpha_cliques(g));
  cert.vertex_bounds.assign(static_cast<std::size_t>(n), -1);

  CoverCheck check = validate_cover(g, cert.cover);
  bool per_vertex_ok = true;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    const long long a = local_alpha(g, v);
    const long long val = check.valency[static_cast<std::size_t>(v)];
    cert.vertex_bounds[static_cast<std::size_t>(v)] = n + 1 - ceil_div(n, static_cast<int>(a));
    // val + n/a <= n+1, cross-multiplied so no rounding can flip it
    if (val * a + n > (n + 1) * a) per_vertex_ok = false;
  }
  cert.bound = check.max_valency;  // informational; the contract is per-vertex
  cert.verdict = check.valid && per_vertex_ok;
  return cert;
}

SplitPair find_split_pair(const Graph& g) {
  SetWitness alpha = independence_number(g);
  if (alpha.value != 2) throw std::invalid_argument("find_split_pair requires alpha(g) = 2");
  Coloring chi = chromatic_number(g);
  SetWitness omega = clique_number(g);
  if (chi.chi <= std::max(omega.value, 2))
    throw std::invalid_argument("find_split_pair requires chi(g) > max(omega, 2)");
  for (auto [u, v] : g.edges()) {
    InducedSubgraph rest = induced_subgraph(g, g.vertices() - VertexSet::of({u, v}));
    int chi_rest = chromatic_number(rest.graph).chi;
    if (chi_rest >= chi.chi - 1) return SplitPair{u, v, chi_rest};
  }
  throw TheoremGapError(
      "no adjacent pair with chi(G - {u1,u2}) >= chi(G) - 1 exists; "
      "the splittability theorem promises one");
}

CoverCertificate cover_claw_free(const Graph& g) {
  if (std::optional<Claw> claw = find_claw(g))
    throw NotClawFreeError(*claw, "cover_claw_free requires a claw-free graph (claw at vertex " +
                                      std::to_string(claw->center) + ")");
  int chi = chromatic_number(g).chi;
  return make_certificate(g, BoundKind::claw_free, g.n() + 1 - chi, claw_free_cliques(g));
}

CoverCertificate exact_certificate(const Graph& g) {
  LccResult r = lcc_exact(g);
  CoverCertificate cert;
  cert.kind = BoundKind::exact;
  cert.bound = r.k;
  cert.cover = std::move(r.cover);
  CoverCheck check = validate_cover(g, cert.cover);
  cert.verdict = check.valid && check.max_valency <= cert.bound;
  return cert;
}

}  // namespace lcc
