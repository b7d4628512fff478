#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "lcc/graph.hpp"

namespace lcc {

struct Clique {
  VertexSet members;
};

/// Family of cliques covering every edge at least once, with the per-vertex
/// valency profile (number of cliques containing each vertex).
struct CliqueCover {
  std::vector<Clique> cliques;
  std::vector<int> valency;
};

/// Builds a cover record from a clique list, deriving valencies.
CliqueCover make_cover(const Graph& g, std::vector<Clique> cliques);

int max_valency(const CliqueCover& cover);

struct CoverCheck {
  bool valid = false;
  bool valency_consistent = true;  // stored valencies match the recomputation
  int max_valency = 0;
  std::vector<int> valency;
  std::optional<int> offending_clique;              // index of a bad clique
  std::optional<std::pair<int, int>> missing_pair;  // nonadjacent pair inside it
  std::optional<std::pair<int, int>> uncovered_edge;
};

/// Recomputes valencies and checks that every clique induces a complete
/// subgraph and every edge is covered.
CoverCheck validate_cover(const Graph& g, const CliqueCover& cover);

/// All cliques (including the empty set) of the subgraph induced by `within`.
std::vector<VertexSet> all_cliques(const Graph& g, VertexSet within);

/// Decides whether a clique covering with all valencies <= k exists.
/// Branches over the cliques that may cover the first uncovered edge.
bool lcc_decide(const Graph& g, int k, std::vector<Clique>* witness = nullptr);

struct LccResult {
  int k = 0;
  CliqueCover cover;
};

/// Smallest k admitting a covering with max valency <= k, with witness.
LccResult lcc_exact(const Graph& g);

/// Family of cliques covering every edge exactly once.
struct CliquePartition {
  std::vector<Clique> cliques;
  int sigma = 0;  // sum of clique sizes
};

struct PartitionCheck {
  bool valid = false;
  bool sigma_consistent = true;
  std::optional<int> offending_clique;
  std::optional<std::pair<int, int>> missing_pair;
  std::optional<std::pair<int, int>> repeated_edge;
  std::optional<std::pair<int, int>> uncovered_edge;
};

PartitionCheck validate_partition(const Graph& g, const CliquePartition& p);

struct ScpResult {
  int sigma = 0;
  CliquePartition partition;
};

struct CpResult {
  int count = 0;
  CliquePartition partition;
};

/// Minimum total clique size over all clique partitions of E(g). Exact
/// branch and bound, guarded to n <= 8.
ScpResult scp_exact(const Graph& g);

/// Minimum number of cliques over all clique partitions of E(g); n <= 8.
CpResult cp_exact(const Graph& g);

enum class BoundKind { alpha2, max_clique, local_alpha, claw_free, exact };

std::string_view bound_kind_name(BoundKind kind);

/// A cover together with the bound it claims to meet. For the per-graph
/// kinds, `bound` caps the maximum valency; for local_alpha, vertex_bounds[v]
/// caps val(v) for each non-isolated v (-1 where vacuous).
struct CoverCertificate {
  BoundKind kind = BoundKind::exact;
  CliqueCover cover;
  int bound = 0;
  std::vector<int> vertex_bounds;
  bool verdict = false;
};

}  // namespace lcc
