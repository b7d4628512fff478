#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lcc/cover.hpp"
#include "lcc/harness.hpp"

using lcc::Graph;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_minus_edge(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u == 0 && v == 1)) g.add_edge(u, v);
  return g;
}

std::string sweep_to_string(const lcc::GraphList& graphs, lcc::ReportFormat format,
                            const lcc::SweepOptions& options) {
  std::ostringstream out;
  lcc::ReportEmitter emitter(out, format);
  lcc::SweepSummary summary = lcc::check_conjectures(
      graphs, options, [&](const lcc::ConjectureReport& r) { emitter.row(r); });
  emitter.finish(summary);
  return out.str();
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("enumerate_labeled_graphs counts") {
  CHECK(lcc::enumerate_labeled_graphs(0).count == 1);
  CHECK(lcc::enumerate_labeled_graphs(3).count == 8);
  CHECK(lcc::enumerate_labeled_graphs(4).count == 64);
  CHECK(lcc::enumerate_labeled_graphs(6).count == 32768);
  CHECK_THROWS_AS(lcc::enumerate_labeled_graphs(8), std::invalid_argument);

  // Mask 0 is the empty graph; the last mask is complete.
  lcc::GraphList graphs = lcc::enumerate_labeled_graphs(4);
  CHECK(graphs.at(0).edge_count() == 0);
  CHECK(graphs.at(graphs.count - 1) == complete(4));

  // All distinct.
  std::vector<std::string> seen;
  for (std::uint64_t i = 0; i < graphs.count; ++i) seen.push_back(lcc::emit_graph6(graphs.at(i)));
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("check_conjectures on all n = 4 graphs") {
  lcc::SweepSummary summary = lcc::check_conjectures(lcc::enumerate_labeled_graphs(4));
  CHECK(summary.total == 64);
  CHECK(summary.conj1_violations == 0);
  CHECK(summary.conj2_violations == 0);
  CHECK(summary.violating_graph6.empty());
}

TEST_CASE("single-graph reports") {
  lcc::SweepOptions options;
  std::vector<lcc::ConjectureReport> rows;
  lcc::check_conjectures(lcc::graph_list_from({complete(5), complete_minus_edge(5)}), options,
                         [&](const lcc::ConjectureReport& r) { rows.push_back(r); });
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].conj2_lhs == 6);  // K_5: 1 + 5 = n + 1
  CHECK(rows[0].conj2_equality);
  CHECK(rows[1].lcc_g == 2);      // K_5 - K_2
  CHECK(rows[1].chi == 4);
  CHECK(rows[1].conj2_lhs == 6);
  CHECK(rows[1].conj2_equality);
}

TEST_CASE("lemma cross-check option") {
  lcc::SweepOptions options;
  options.check_lemma = true;
  lcc::SweepSummary summary =
      lcc::check_conjectures(lcc::enumerate_labeled_graphs(4), options);
  CHECK(summary.stats.lemma_checks == 64);
  CHECK(summary.lemma_violations == 0);
}

TEST_CASE("report emitters: frozen schemas") {
  CHECK(lcc::report_csv_header() ==
        "graph6,n,lcc,lcc_complement,chi,conj1_lhs,conj1_holds,conj2_lhs,conj2_holds,equality2");

  std::vector<lcc::ConjectureReport> rows;
  lcc::check_conjectures(lcc::graph_list_from({complete(3)}), {},
                         [&](const lcc::ConjectureReport& r) { rows.push_back(r); });
  REQUIRE(rows.size() == 1);
  CHECK(lcc::report_row(rows[0], lcc::ReportFormat::csv) == "Bw,3,1,0,3,1,1,4,1,1");
  CHECK(lcc::report_row(rows[0], lcc::ReportFormat::json_lines) ==
        "{\"graph6\":\"Bw\",\"n\":3,\"lcc\":1,\"lcc_complement\":0,\"chi\":3,"
        "\"conj1_lhs\":1,\"conj1_holds\":true,\"conj2_lhs\":4,\"conj2_holds\":true,"
        "\"equality2\":true}");

  // Empty stream: header plus zero-total footer.
  std::string empty_csv = sweep_to_string(lcc::graph_list_from({}), lcc::ReportFormat::csv, {});
  CHECK(empty_csv == lcc::report_csv_header() +
                         "\n# total=0 conj1_violations=0 conj2_violations=0 "
                         "conj1_equalities=0 conj2_equalities=0\n");
}

TEST_CASE("sweep output is byte-identical across thread counts") {
  lcc::GraphList graphs = lcc::enumerate_labeled_graphs(5);
  lcc::SweepOptions serial;
  serial.threads = 1;
  lcc::SweepOptions parallel;
  parallel.threads = 4;
  std::string a = sweep_to_string(graphs, lcc::ReportFormat::csv, serial);
  std::string b = sweep_to_string(graphs, lcc::ReportFormat::csv, parallel);
  CHECK(a == b);
  std::string c = sweep_to_string(graphs, lcc::ReportFormat::json_lines, serial);
  std::string d = sweep_to_string(graphs, lcc::ReportFormat::json_lines, parallel);
  CHECK(c == d);
}

TEST_CASE("cache put/get round trip and persistence") {
  TempFile file("lcc_cache_test.txt");
  {
    lcc::InvariantCache cache(file.path);
    CHECK(!cache.get("Bw").has_value());
    cache.put("Bw", {1, 3, 1, 3});
    std::optional<lcc::InvariantBundle> hit = cache.get("Bw");
    REQUIRE(hit.has_value());
    CHECK(*hit == lcc::InvariantBundle{1, 3, 1, 3});
  }
  lcc::InvariantCache reloaded(file.path);
  CHECK(reloaded.size() == 1);
  REQUIRE(reloaded.get("Bw").has_value());
  CHECK(reloaded.get("Bw")->chi == 3);
}

TEST_CASE("corrupt cache file is rebuilt") {
  TempFile file("lcc_cache_corrupt.txt");
  {
    std::ofstream out(file.path);
    out << "Bw 1 3 1 3\nnot a valid line\n";
  }
  lcc::InvariantCache cache(file.path);
  CHECK(cache.size() == 0);
  cache.put("A_", {1, 2, 1, 2});
  lcc::InvariantCache reloaded(file.path);
  CHECK(reloaded.size() == 1);
}

TEST_CASE("warm cache sweep needs zero solver calls") {
  TempFile file("lcc_cache_warm.txt");
  lcc::InvariantCache cache(file.path);
  lcc::SweepOptions options;
  options.cache = &cache;

  lcc::SweepSummary cold = lcc::check_conjectures(lcc::enumerate_labeled_graphs(4), options);
  CHECK(cold.stats.solver_calls > 0);
  CHECK(cold.stats.solver_calls == cache.size());

  lcc::SweepSummary warm = lcc::check_conjectures(lcc::enumerate_labeled_graphs(4), options);
  CHECK(warm.stats.solver_calls == 0);
  CHECK(warm.stats.cache_hits == 2 * warm.total);
  // The random audit recomputes a small sample of hits.
  CHECK(warm.stats.audit_checks <= warm.stats.cache_hits / 10);

  // Cached results leave the report stream unchanged.
  lcc::SweepOptions plain;
  CHECK(sweep_to_string(lcc::enumerate_labeled_graphs(4), lcc::ReportFormat::csv, options) ==
        sweep_to_string(lcc::enumerate_labeled_graphs(4), lcc::ReportFormat::csv, plain));
}

TEST_CASE("construction suite summaries, n = 4") {
  lcc::GraphList graphs = lcc::enumerate_labeled_graphs(4);

  lcc::ConstructionSummary mc =
      lcc::run_construction_suite(graphs, lcc::ConstructionMethod::max_clique);
  CHECK(mc.applied == 64);
  CHECK(mc.verdict_true == 64);
  CHECK(mc.errors == 0);

  lcc::ConstructionSummary a2 =
      lcc::run_construction_suite(graphs, lcc::ConstructionMethod::alpha2);
  CHECK(a2.applied + a2.skipped_precondition == 64);
  CHECK(a2.verdict_true == a2.applied);

  lcc::ConstructionSummary la =
      lcc::run_construction_suite(graphs, lcc::ConstructionMethod::local_alpha, 2);
  CHECK(la.applied == 64);
  CHECK(la.verdict_true == 64);

  lcc::ConstructionSummary cf =
      lcc::run_construction_suite(graphs, lcc::ConstructionMethod::claw_free);
  CHECK(cf.applied + cf.skipped_precondition == 64);
  CHECK(cf.verdict_true == cf.applied);
  CHECK(cf.skipped_precondition > 0);  // K_{1,3} labelings exist at n = 4
}

TEST_CASE("construction method names") {
  CHECK(lcc::parse_construction_method("alpha2") == lcc::ConstructionMethod::alpha2);
  CHECK(lcc::parse_construction_method("max-clique") == lcc::ConstructionMethod::max_clique);
  CHECK(lcc::parse_construction_method("nope") == std::nullopt);
  CHECK(lcc::construction_method_name(lcc::ConstructionMethod::claw_free) == "claw-free");
}
