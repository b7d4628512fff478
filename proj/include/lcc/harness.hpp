#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcc/graph.hpp"

namespace lcc {

/// Invariants worth persisting per graph6 key.
struct InvariantBundle {
  int lcc = 0;
  int chi = 0;
  int alpha = 0;
  int omega = 0;
  friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

/// Append-only key-value store of invariant bundles keyed by graph6 string.
/// Optionally backed by a text file (one "key lcc chi alpha omega" line per
/// entry); an unreadable file is dropped and rebuilt with a warning. Safe to
/// delete between runs. Concurrent get/put are serialized internally.
class InvariantCache {
 public:
  InvariantCache() = default;
  explicit InvariantCache(const std::filesystem::path& file);
  ~InvariantCache();

  std::optional<InvariantBundle> get(const std::string& key) const;
  void put(const std::string& key, const InvariantBundle& bundle);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, InvariantBundle> entries_;
  std::unique_ptr<std::ofstream> append_;
};

/// Indexable graph source; `at(i)` must be pure so workers can share it.
struct GraphList {
  std::uint64_t count = 0;
  std::function<Graph(std::uint64_t)> at;
};

/// All 2^C(n,2) labeled graphs on n vertices in edge-mask order. n <= 7.
GraphList enumerate_labeled_graphs(int n);
GraphList graph_list_from(std::vector<Graph> graphs);

/// Eagerly computed report for one graph.
struct ConjectureReport {
  std::string graph6;
  int n = 0;
  int lcc_g = 0;
  int lcc_complement = 0;
  int chi = 0;
  int conj1_lhs = 0;  // lcc(G) + lcc(~G), compared against n
  int conj2_lhs = 0;  // lcc(G) + chi(G), compared against n+1
  bool conj1_holds = false;
  bool conj2_holds = false;
  bool conj1_equality = false;
  bool conj2_equality = false;
  std::string method = "exact";  // "exact" or "cache"
};

struct SweepStats {
  std::uint64_t solver_calls = 0;  // fresh bundle computations
  std::uint64_t cache_hits = 0;
  std::uint64_t audit_checks = 0;  // cache hits recomputed for cross-checking
  std::uint64_t lemma_checks = 0;
};

struct SweepSummary {
  std::uint64_t total = 0;
  std::uint64_t conj1_violations = 0;
  std::uint64_t conj2_violations = 0;
  std::uint64_t conj1_equalities = 0;
  std::uint64_t conj2_equalities = 0;
  std::uint64_t lemma_violations = 0;
  std::vector<std::string> violating_graph6;
  SweepStats stats;
};

struct SweepOptions {
  int threads = 1;
  bool check_lemma = false;  // also verify lcc(g + isolated vertex) == lcc(g)
  InvariantCache* cache = nullptr;
  double audit_fraction = 0.01;  // share of cache hits recomputed and compared
  std::uint64_t audit_seed = 0x1c3a11bull;
};

using ReportSink = std::function<void(const ConjectureReport&)>;

InvariantBundle compute_bundle(const Graph& g);

/// Evaluates both conjectures on every graph of the source. Reports reach the
/// sink in index order regardless of thread count.
SweepSummary check_conjectures(const GraphList& graphs, const SweepOptions& options = {},
                               const ReportSink& sink = nullptr);

enum class ConstructionMethod { alpha2, max_clique, local_alpha, claw_free };

std::string_view construction_method_name(ConstructionMethod method);
std::optional<ConstructionMethod> parse_construction_method(std::string_view name);

struct ConstructionSummary {
  std::uint64_t applied = 0;
  std::uint64_t verdict_true = 0;
  std::uint64_t skipped_precondition = 0;
  std::uint64_t errors = 0;
  std::vector<std::string> failures;  // graph6 of verdict-false or errored graphs
};

/// Applies one construction to every source graph meeting its precondition.
ConstructionSummary run_construction_suite(const GraphList& graphs, ConstructionMethod method,
                                           int threads = 1);

enum class ReportFormat { csv, json_lines };

std::string report_csv_header();
std::string report_row(const ConjectureReport& r, ReportFormat format);
std::string report_footer(const SweepSummary& s, ReportFormat format);

/// Streams header, rows, and summary footer to `out`.
class ReportEmitter {
 public:
  ReportEmitter(std::ostream& out, ReportFormat format);
  void row(const ConjectureReport& r);
  void finish(const SweepSummary& s);

 private:
  std::ostream& out_;
  ReportFormat format_;
};

}  // namespace lcc
