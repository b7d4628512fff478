#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lcc/cover.hpp"
#include "lcc/graph.hpp"

namespace lcc {

enum class TriangleColor { original, complement };

struct ColoredTriangle {
  int a = 0, b = 0, c = 0;  // a < b < c
  TriangleColor color = TriangleColor::original;
};

/// Edge-disjoint triangles, each monochromatic in the 2-coloring of K_n
/// induced by g and its complement. k triangles cover m = 3k edges.
struct TrianglePacking {
  std::vector<ColoredTriangle> triangles;
  int k = 0;
  int m = 0;
};

/// Greedy maximal packing: vertex triples in lexicographic order, taken when
/// monochromatic and edge-disjoint from everything taken so far.
TrianglePacking pack_monochromatic_triangles(const Graph& g);

/// Explicit clique partitions of E(g) and E(complement g) built from a
/// packing: its triangles plus every remaining edge as a K_2.
struct NgBound {
  long long realized = 0;
  TrianglePacking packing;
  CliquePartition partition_g;
  CliquePartition partition_complement;
};

/// Realized sigma total: n(n-1) - 3k.
NgBound scp_ng_bound(const Graph& g);

/// Realized clique count: C(n,2) + k - m = C(n,2) - 2k.
NgBound cp_ng_bound(const Graph& g);

// Asymptotic coefficients reported alongside realized bounds, reference
// only; the packing constant comes from a computer-aided extremal result and
// is never re-derived here.
inline constexpr std::pair<long long, long long> kPackingConstant{365, 4704};
inline constexpr std::pair<long long, long long> kScpSumCoefficient{1203, 1568};
inline constexpr std::pair<long long, long long> kCpSumCoefficient{811, 2352};
inline constexpr std::pair<long long, long long> kScpSumPriorCoefficient{9, 10};
inline constexpr std::pair<long long, long long> kCpSumPriorCoefficient{13, 30};

/// True iff g is the complete bipartite graph with parts of size
/// floor(n/2) and ceil(n/2).
bool is_balanced_complete_bipartite(const Graph& g);

///// Inequality checkers (section 2 forms). Each record carries enough to
///// reproduce the comparison exactly; `holds` is the full verdict including
///// the equality characterization where one is stated.

struct NearRegularVerdict {
  std::string graph6;
  int k = 0;       // common degree floor: k <= deg(x) <= k+1
  int lcc_g = 0;
  int lcc_complement = 0;
  int bound_g = 0;           // k+1
  int bound_complement = 0;  // n-1-k
  bool conj1_holds = false;  // lcc(G)+lcc(~G) <= n
  bool holds = false;
};

/// Requires a near-regular graph (degrees within {k, k+1}).
NearRegularVerdict check_near_regular(const Graph& g);

struct RatioBoundVerdict {
  std::string graph6;
  long long lhs_num = 0;  // Delta + chi*(omega-1)
  long long lhs_den = 1;  // omega-1
  long long rhs = 0;      // n+1
  bool inequality_holds = false;
  bool equality = false;
  bool is_complete_graph = false;
  bool is_star = false;
  bool holds = false;  // inequality and (equality <=> K_n or K_{1,n-1})
};

/// Delta/(omega-1) + chi <= n+1 in exact rationals. Requires an edge.
RatioBoundVerdict check_ratio_bound(const Graph& g);

struct AlphaChiVerdict {
  std::string graph6;
  int lhs = 0;  // alpha + chi
  int rhs = 0;  // n+1
  bool inequality_holds = false;
  bool equality = false;
  int qualifying_vertex = -1;  // v with N(v) a clique and V \ N(v) independent
  bool holds = false;
};

AlphaChiVerdict check_alpha_chi_bound(const Graph& g);

struct CorollaryAlphaVerdict {
  std::string graph6;
  int lcc = 0;
  int alpha_local = 0;
  int alpha = 0;
  bool local_holds = false;      // lcc + n/alpha_L <= n+1
  bool global_holds = false;     // lcc + n/alpha  <= n+1
  bool local_equality = false;
  bool global_equality = false;
  bool holds = false;
};

/// Requires at least one edge (alpha_L >= 1).
CorollaryAlphaVerdict check_corollary_alpha(const Graph& g);

}  // namespace lcc
