#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lcc/harness.hpp"
#include "lcc/invariants.hpp"
#include "lcc/json_io.hpp"
#include "lcc/ng_bounds.hpp"
#include "oracles.hpp"

using lcc::Graph;
using lcc::VertexSet;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

void check_packing_sound(const Graph& g, const lcc::TrianglePacking& p) {
  std::vector<std::uint64_t> used(static_cast<std::size_t>(g.n()), 0);
  for (const lcc::ColoredTriangle& t : p.triangles) {
    bool in_g = t.color == lcc::TriangleColor::original;
    for (auto [u, v] : {std::pair{t.a, t.b}, std::pair{t.a, t.c}, std::pair{t.b, t.c}}) {
      CHECK(g.has_edge(u, v) == in_g);
      CHECK(((used[static_cast<std::size_t>(u)] >> v) & 1) == 0);
      used[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
      used[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
  }
  CHECK(p.k == static_cast<int>(p.triangles.size()));
  CHECK(p.m == 3 * p.k);
}

}  // namespace

TEST_CASE("triangle packing examples") {
  CHECK(lcc::pack_monochromatic_triangles(complete(3)).k == 1);
  CHECK(lcc::pack_monochromatic_triangles(cycle(5)).k == 0);  // both color classes are C_5
  CHECK(lcc::pack_monochromatic_triangles(complete(6)).k == 4);
  CHECK(oracles::oracle_max_triangle_packing(complete(6)) == 4);
}

TEST_CASE("packing soundness and greedy <= maximum, n <= 5 exhaustive") {
  for (int n = 0; n <= 5; ++n) {
    lcc::GraphList graphs = lcc::enumerate_labeled_graphs(n);
    for (std::uint64_t i = 0; i < graphs.count; ++i) {
      Graph g = graphs.at(i);
      lcc::TrianglePacking p = lcc::pack_monochromatic_triangles(g);
      check_packing_sound(g, p);
      CHECK(p.k <= oracles::oracle_max_triangle_packing(g));
    }
  }
}

TEST_CASE("packing greedy <= maximum on 6-vertex samples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracles::random_graph(6, rng);
    lcc::TrianglePacking p = lcc::pack_monochromatic_triangles(g);
    check_packing_sound(g, p);
    CHECK(p.k <= oracles::oracle_max_triangle_packing(g));
  }
  CHECK(lcc::pack_monochromatic_triangles(Graph(6)).k == 4);  // complement is K_6
  CHECK(lcc::pack_monochromatic_triangles(complete_bipartite(3, 3)).k == 2);
}

TEST_CASE("scp accounting identity") {
  lcc::NgBound k3 = lcc::scp_ng_bound(complete(3));
  CHECK(k3.realized == 3);  // n(n-1) - 3k = 6 - 3
  CHECK(k3.realized == lcc::scp_exact(complete(3)).sigma + lcc::scp_exact(Graph(3)).sigma);

  lcc::NgBound c5 = lcc::scp_ng_bound(cycle(5));
  CHECK(c5.realized == 20);
  CHECK(lcc::scp_exact(cycle(5)).sigma == 10);
  CHECK(lcc::scp_exact(lcc::complement(cycle(5))).sigma == 10);
}

TEST_CASE("cp accounting identity") {
  lcc::NgBound k3 = lcc::cp_ng_bound(complete(3));
  CHECK(k3.realized == 1);  // C(3,2) - 2k = 3 - 2
  CHECK(k3.realized == lcc::cp_exact(complete(3)).count + lcc::cp_exact(Graph(3)).count);

  lcc::NgBound c4 = lcc::cp_ng_bound(cycle(4));
  CHECK(c4.realized == 6);  // k = 0
  CHECK(lcc::cp_exact(cycle(4)).count + lcc::cp_exact(lcc::complement(cycle(4))).count == 6);
}

TEST_CASE("realized bounds dominate exact sums, n <= 4 exhaustive") {
  for (int n = 0; n <= 4; ++n) {
    lcc::GraphList graphs = lcc::enumerate_labeled_graphs(n);
    for (std::uint64_t i = 0; i < graphs.count; ++i) {
      Graph g = graphs.at(i);
      Graph comp = lcc::complement(g);

      lcc::NgBound scp = lcc::scp_ng_bound(g);
      CHECK(lcc::validate_partition(g, scp.partition_g).valid);
      CHECK(lcc::validate_partition(comp, scp.partition_complement).valid);
      CHECK(scp.realized == static_cast<long long>(n) * (n - 1) - 3 * scp.packing.k);
      CHECK(scp.realized >= lcc::scp_exact(g).sigma + lcc::scp_exact(comp).sigma);

      lcc::NgBound cp = lcc::cp_ng_bound(g);
      CHECK(cp.realized == static_cast<long long>(n) * (n - 1) / 2 - 2 * cp.packing.k);
      CHECK(cp.realized >= lcc::cp_exact(g).count + lcc::cp_exact(comp).count);
    }
  }
}

TEST_CASE("balanced complete bipartite recognition") {
  CHECK(lcc::is_balanced_complete_bipartite(complete_bipartite(2, 2)));
  CHECK(lcc::is_balanced_complete_bipartite(complete_bipartite(2, 3)));
  CHECK(lcc::is_balanced_complete_bipartite(complete(2)));
  CHECK(lcc::is_balanced_complete_bipartite(Graph(1)));
  CHECK(lcc::is_balanced_complete_bipartite(Graph(0)));
  CHECK(!lcc::is_balanced_complete_bipartite(complete_bipartite(1, 3)));
  CHECK(!lcc::is_balanced_complete_bipartite(cycle(5)));
  CHECK(!lcc::is_balanced_complete_bipartite(complete(3)));
  CHECK(!lcc::is_balanced_complete_bipartite(Graph(2)));
}

TEST_CASE("check_near_regular") {
  lcc::NearRegularVerdict c5 = lcc::check_near_regular(cycle(5));
  CHECK(c5.holds);
  CHECK(c5.k == 2);
  CHECK(c5.lcc_g <= 3);
  CHECK(c5.lcc_complement <= 2);
  CHECK(c5.lcc_g + c5.lcc_complement == 4);

  lcc::NearRegularVerdict k4 = lcc::check_near_regular(complete(4));
  CHECK(k4.holds);
  CHECK(k4.k == 3);
  CHECK(k4.lcc_g == 1);
  CHECK(k4.lcc_complement == 0);

  lcc::NearRegularVerdict p4 = lcc::check_near_regular(path(4));
  CHECK(p4.holds);
  CHECK(p4.k == 1);

  CHECK_THROWS_AS(lcc::check_near_regular(star(3)), std::invalid_argument);
}

TEST_CASE("check_ratio_bound examples") {
  lcc::RatioBoundVerdict k4 = lcc::check_ratio_bound(complete(4));
  CHECK(k4.holds);
  CHECK(k4.equality);
  CHECK(k4.is_complete_graph);

  lcc::RatioBoundVerdict k14 = lcc::check_ratio_bound(star(4));
  CHECK(k14.holds);
  CHECK(k14.equality);  // 4/1 + 2 = 6 = n+1
  CHECK(k14.is_star);

  lcc::RatioBoundVerdict c5 = lcc::check_ratio_bound(cycle(5));
  CHECK(c5.holds);
  CHECK(!c5.equality);  // 2/1 + 3 = 5 < 6
  CHECK(c5.lhs_num == 5);
  CHECK(c5.lhs_den == 1);

  CHECK_THROWS_AS(lcc::check_ratio_bound(Graph(3)), std::invalid_argument);
}

TEST_CASE("check_alpha_chi_bound examples") {
  for (int n = 1; n <= 5; ++n) {
    lcc::AlphaChiVerdict kn = lcc::check_alpha_chi_bound(complete(n));
    CHECK(kn.holds);
    CHECK(kn.equality);
    CHECK(kn.qualifying_vertex == 0);
  }
  lcc::AlphaChiVerdict k13 = lcc::check_alpha_chi_bound(star(3));
  CHECK(k13.holds);
  CHECK(k13.equality);  // 3 + 2 = 5 = n+1
  CHECK(k13.qualifying_vertex >= 0);

  lcc::AlphaChiVerdict c5 = lcc::check_alpha_chi_bound(cycle(5));
  CHECK(c5.holds);
  CHECK(!c5.equality);  // 2 + 3 = 5 < 6
  CHECK(c5.qualifying_vertex == -1);
}

TEST_CASE("proposition checkers hold exhaustively, n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    lcc::GraphList graphs = lcc::enumerate_labeled_graphs(n);
    for (std::uint64_t i = 0; i < graphs.count; ++i) {
      Graph g = graphs.at(i);
      if (g.edge_count() > 0) CHECK(lcc::check_ratio_bound(g).holds);
      CHECK(lcc::check_alpha_chi_bound(g).holds);
    }
  }
}

TEST_CASE("check_corollary_alpha") {
  for (int n = 2; n <= 6; ++n) {
    lcc::CorollaryAlphaVerdict kn = lcc::check_corollary_alpha(complete(n));
    CHECK(kn.holds);
    CHECK(kn.lcc == 1);  // 1 + n/1 = n+1, equality
    CHECK(kn.local_equality);
    CHECK(kn.global_equality);
  }
  lcc::CorollaryAlphaVerdict c5 = lcc::check_corollary_alpha(cycle(5));
  CHECK(c5.holds);  // 2 + 5/2 = 4.5 <= 6
  CHECK_THROWS_AS(lcc::check_corollary_alpha(Graph(3)), std::invalid_argument);

  for (int n = 1; n <= 5; ++n) {
    lcc::GraphList graphs = lcc::enumerate_labeled_graphs(n);
    for (std::uint64_t i = 0; i < graphs.count; ++i) {
      Graph g = graphs.at(i);
      if (g.edge_count() == 0) continue;
      CHECK(lcc::check_corollary_alpha(g).holds);
    }
  }
}

TEST_CASE("verdict JSON carries graph6, bound name, comparison, and witnesses") {
  nlohmann::json ratio = lcc::to_json(lcc::check_ratio_bound(star(4)));
  CHECK(ratio["graph6"] == lcc::emit_graph6(star(4)));
  CHECK(ratio["bound"] == "ratio");
  CHECK(ratio["lhs_num"] == 6);
  CHECK(ratio["lhs_den"] == 1);
  CHECK(ratio["rhs"] == 6);
  CHECK(ratio["equality"] == true);
  CHECK(ratio["witness"]["star"] == true);
  CHECK(ratio["holds"] == true);

  nlohmann::json ac = lcc::to_json(lcc::check_alpha_chi_bound(cycle(5)));
  CHECK(ac["bound"] == "alpha-chi");
  CHECK(ac["lhs"] == 5);
  CHECK(ac["rhs"] == 6);
  CHECK(ac["equality"] == false);
  CHECK(ac["witness"]["qualifying_vertex"] == -1);

  nlohmann::json nr = lcc::to_json(lcc::check_near_regular(cycle(5)));
  CHECK(nr["bound"] == "near-regular");
  CHECK(nr["k"] == 2);
  CHECK(nr["holds"] == true);
}
