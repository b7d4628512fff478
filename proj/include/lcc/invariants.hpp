#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcc/graph.hpp"

namespace lcc {

struct SetWitness {
  int value = 0;
  VertexSet witness;
};

/// alpha(G) with one maximum independent set as witness.
SetWitness independence_number(const Graph& g);

/// alpha of the subgraph induced by `candidates`, witness in original labels.
SetWitness independence_number_within(const Graph& g, VertexSet candidates);

/// omega(G) = alpha of the complement; witness is a maximum clique.
SetWitness clique_number(const Graph& g);

struct Coloring {
  int chi = 0;
  std::vector<int> color;  // proper coloring with values in [0, chi)
};

/// Exact chromatic number: k-coloring feasibility search from the clique
/// lower bound up to the greedy upper bound.
Coloring chromatic_number(const Graph& g);

/// alpha_G(v): independence number of the subgraph induced by N(v).
int local_alpha(const Graph& g, int v);

/// alpha_L(G) = max over vertices of local_alpha.
int local_independence_number(const Graph& g);

struct Claw {
  int center = -1;
  VertexSet leaves;  // three mutually nonadjacent neighbors of center
};

/// First induced K_{1,3} in lexicographic order, if any.
std::optional<Claw> find_claw(const Graph& g);
bool is_claw_free(const Graph& g);

/// Partitions s into exactly chi(complement(G[s])) cliques of g, via an exact
/// proper coloring of the complement of the induced subgraph.
std::vector<VertexSet> vertex_clique_partition(const Graph& g, VertexSet s);

/// Maximum-cardinality matching as (u, v) pairs with u < v. Unmatched
/// vertices are pairwise nonadjacent.
std::vector<std::pair<int, int>> maximum_matching(const Graph& g);

}  // namespace lcc
