#include "lcc/harness.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lcc/constructions.hpp"
#include "lcc/cover.hpp"
#include "lcc/invariants.hpp"

namespace lcc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Runs fn(i) for i in [begin, end) on up to `threads` workers.
void parallel_for(std::uint64_t begin, std::uint64_t end, int threads,
                  const std::function<void(std::uint64_t)>& fn) {
  const std::uint64_t count = end - begin;
  if (threads <= 1 || count < 2) {
    for (std::uint64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{begin};
  auto worker = [&] {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= end) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int spawn = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), count));
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || c == '"') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

struct BundleContext {
  const SweepOptions& options;
  std::atomic<std::uint64_t> solver_calls{0};
  std::atomic<std::uint64_t> cache_hits{0};
  std::atomic<std::uint64_t> audit_checks{0};
  std::atomic<std::uint64_t> lemma_checks{0};
  std::atomic<std::uint64_t> lemma_violations{0};

  InvariantBundle bundle_for(const Graph& g, const std::string& key, bool* from_cache) {
    if (options.cache != nullptr) {
      if (std::optional<InvariantBundle> hit = options.cache->get(key)) {
        cache_hits.fetch_add(1);
        if (from_cache) *from_cache = true;
        std::uint64_t roll = splitmix64(options.audit_seed ^ fnv1a(key));
        if (static_cast<double>(roll) <
            options.audit_fraction * 18446744073709551616.0 /* 2^64 */) {
          audit_checks.fetch_add(1);
          InvariantBundle fresh = compute_bundle(g);
          if (!(fresh == *hit))
            throw std::logic_error("cache audit mismatch for key \"" + key + "\"");
        }
        return *hit;
      }
    }
    if (from_cache) *from_cache = false;
    solver_calls.fetch_add(1);
    InvariantBundle fresh = compute_bundle(g);
    if (options.cache != nullptr) options.cache->put(key, fresh);
    return fresh;
  }
};

ConjectureReport analyze_graph(const Graph& g, BundleContext& ctx) {
  ConjectureReport r;
  r.n = g.n();
  r.graph6 = emit_graph6(g);
  Graph comp = complement(g);

  bool cached_g = false, cached_c = false;
  InvariantBundle bundle = ctx.bundle_for(g, r.graph6, &cached_g);
  InvariantBundle bundle_comp = ctx.bundle_for(comp, emit_graph6(comp), &cached_c);

  r.lcc_g = bundle.lcc;
  r.lcc_complement = bundle_comp.lcc;
  r.chi = bundle.chi;
  r.conj1_lhs = r.lcc_g + r.lcc_complement;
  r.conj2_lhs = r.lcc_g + r.chi;
  r.conj1_holds = r.conj1_lhs <= r.n;
  r.conj2_holds = r.conj2_lhs <= r.n + 1;
  r.conj1_equality = r.conj1_lhs == r.n;
  r.conj2_equality = r.conj2_lhs == r.n + 1;
  r.method = (cached_g && cached_c) ? "cache" : "exact";

  if (ctx.options.check_lemma && g.n() < kMaxVertices) {
    ctx.lemma_checks.fetch_add(1);
    Graph padded = disjoint_union_with_isolated(g);
    int lcc_padded = (ctx.options.cache != nullptr && padded.n() <= 62)
                         ? ctx.bundle_for(padded, emit_graph6(padded), nullptr).lcc
                         : lcc_exact(padded).k;
    if (lcc_padded != r.lcc_g) ctx.lemma_violations.fetch_add(1);
  }
  return r;
}

}  // namespace

InvariantCache::InvariantCache(const std::filesystem::path& file) {
  bool corrupt = false;
  {
    std::ifstream in(file);
    std::string line;
    while (in && std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream row(line);
      std::string key;
      InvariantBundle b;
      if (!(row >> key >> b.lcc >> b.chi >> b.alpha >> b.omega)) {
        corrupt = true;
        break;
      }
      entries_[key] = b;
    }
  }
  if (corrupt) {
    std::cerr << "warning: cache file " << file << " is corrupt; rebuilding from scratch\n";
    entries_.clear();
    std::ofstream truncate(file, std::ios::trunc);
  }
  append_ = std::make_unique<std::ofstream>(file, std::ios::app);
  if (!*append_)
    std::cerr << "warning: cache file " << file << " is not writable; cache is in-memory only\n";
}

InvariantCache::~InvariantCache() = default;

std::optional<InvariantBundle> InvariantCache::get(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void InvariantCache::put(const std::string& key, const InvariantBundle& bundle) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = entries_.emplace(key, bundle);
  if (!inserted) return;  // append-only: first value wins
  if (append_ && *append_) {
    *append_ << key << ' ' << bundle.lcc << ' ' << bundle.chi << ' ' << bundle.alpha << ' '
             << bundle.omega << '\n';
    append_->flush();
  }
}

std::size_t InvariantCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

GraphList enumerate_labeled_graphs(int n) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("enumerate_labeled_graphs is guarded to n <= 7 (2^21 graphs)");
  const int m = n * (n - 1) / 2;
  GraphList list;
  list.count = std::uint64_t{1} << m;
  list.at = [n](std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    return g;
  };
  return list;
}

GraphList graph_list_from(std::vector<Graph> graphs) {
  auto shared = std::make_shared<std::vector<Graph>>(std::move(graphs));
  GraphList list;
  list.count = shared->size();
  list.at = [shared](std::uint64_t i) { return (*shared)[i]; };
  return list;
}

InvariantBundle compute_bundle(const Graph& g) {
  InvariantBundle b;
  b.lcc = lcc_exact(g).k;
  b.chi = chromatic_number(g).chi;
  b.alpha = independence_number(g).value;
  b.omega = clique_number(g).value;
  return b;
}

SweepSummary check_conjectures(const GraphList& graphs, const SweepOptions& options,
                               const ReportSink& sink) {
  SweepSummary summary;
  summary.total = graphs.count;
  BundleContext ctx{options};

  // Batches keep memory bounded at n = 7 scale while the emitter preserves
  // index order for byte-identical output at any thread count.
  const std::uint64_t batch = 1 << 14;
  std::vector<ConjectureReport> buffer;
  for (std::uint64_t start = 0; start < graphs.count; start += batch) {
    const std::uint64_t stop = std::min(graphs.count, start + batch);
    buffer.resize(static_cast<std::size_t>(stop - start));
    parallel_for(start, stop, options.threads, [&](std::uint64_t i) {
      buffer[static_cast<std::size_t>(i - start)] = analyze_graph(graphs.at(i), ctx);
    });
    for (const ConjectureReport& r : buffer) {
      if (!r.conj1_holds) ++summary.conj1_violations;
      if (!r.conj2_holds) ++summary.conj2_violations;
      if (r.conj1_equality) ++summary.conj1_equalities;
      if (r.conj2_equality) ++summary.conj2_equalities;
      if (!r.conj1_holds || !r.conj2_holds) summary.violating_graph6.push_back(r.graph6);
      if (sink) sink(r);
    }
  }
  summary.lemma_violations = ctx.lemma_violations.load();
  summary.stats.solver_calls = ctx.solver_calls.load();
  summary.stats.cache_hits = ctx.cache_hits.load();
  summary.stats.audit_checks = ctx.audit_checks.load();
  summary.stats.lemma_checks = ctx.lemma_checks.load();
  return summary;
}

std::string_view construction_method_name(ConstructionMethod method) {
  switch (method) {
    case ConstructionMethod::alpha2: return "alpha2";
    case ConstructionMethod::max_clique: return "max-clique";
    case ConstructionMethod::local_alpha: return "local-alpha";
    case ConstructionMethod::claw_free: return "claw-free";
  }
  return "unknown";
}

std::optional<ConstructionMethod> parse_construction_method(std::string_view name) {
  if (name == "alpha2") return ConstructionMethod::alpha2;
  if (name == "max-clique") return ConstructionMethod::max_clique;
  if (name == "local-alpha") return ConstructionMethod::local_alpha;
  if (name == "claw-free") return ConstructionMethod::claw_free;
  return std::nullopt;
}

ConstructionSummary run_construction_suite(const GraphList& graphs, ConstructionMethod method,
                                           int threads) {
  std::atomic<std::uint64_t> applied{0}, verdict_true{0}, skipped{0}, errors{0};
  std::mutex failures_mutex;
  std::vector<std::string> failures;

  auto consider = [&](std::uint64_t i) {
    Graph g = graphs.at(i);
    try {
      CoverCertificate cert;
      switch (method) {
        case ConstructionMethod::alpha2:
          if (independence_number(g).value != 2) {
            skipped.fetch_add(1);
            return;
          }
          cert = cover_alpha2(g);
          break;
        case ConstructionMethod::max_clique:
          if (g.n() < 1) {
            skipped.fetch_add(1);
            return;
          }
          cert = cover_max_clique(g);
          break;
        case ConstructionMethod::local_alpha:
          cert = cover_local_alpha(g);
          break;
        case ConstructionMethod::claw_free:
          if (!is_claw_free(g)) {
            skipped.fetch_add(1);
            return;
          }
          cert = cover_claw_free(g);
          break;
      }
      applied.fetch_add(1);
      if (cert.verdict) {
        verdict_true.fetch_add(1);
      } else {
        std::lock_guard<std::mutex> lock(failures_mutex);
        failures.push_back(emit_graph6(g));
      }
    } catch (const std::exception& e) {
      errors.fetch_add(1);
      std::lock_guard<std::mutex> lock(failures_mutex);
      failures.push_back(emit_graph6(g) + " error: " + e.what());
    }
  };

  const std::uint64_t batch = 1 << 14;
  for (std::uint64_t start = 0; start < graphs.count; start += batch)
    parallel_for(start, std::min(graphs.count, start + batch), threads, consider);

  ConstructionSummary summary;
  summary.applied = applied.load();
  summary.verdict_true = verdict_true.load();
  summary.skipped_precondition = skipped.load();
  summary.errors = errors.load();
  std::sort(failures.begin(), failures.end());
  summary.failures = std::move(failures);
  return summary;
}

std::string report_csv_header() {
  return "graph6,n,lcc,lcc_complement,chi,conj1_lhs,conj1_holds,conj2_lhs,conj2_holds,equality2";
}

std::string report_row(const ConjectureReport& r, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::csv) {
    out << r.graph6 << ',' << r.n << ',' << r.lcc_g << ',' << r.lcc_complement << ',' << r.chi
        << ',' << r.conj1_lhs << ',' << (r.conj1_holds ? 1 : 0) << ',' << r.conj2_lhs << ','
        << (r.conj2_holds ? 1 : 0) << ',' << (r.conj2_equality ? 1 : 0);
  } else {
    out << "{\"graph6\":\"" << json_escape(r.graph6) << "\",\"n\":" << r.n << ",\"lcc\":" << r.lcc_g
        << ",\"lcc_complement\":" << r.lcc_complement << ",\"chi\":" << r.chi
        << ",\"conj1_lhs\":" << r.conj1_lhs
        << ",\"conj1_holds\":" << (r.conj1_holds ? "true" : "false")
        << ",\"conj2_lhs\":" << r.conj2_lhs
        << ",\"conj2_holds\":" << (r.conj2_holds ? "true" : "false")
        << ",\"equality2\":" << (r.conj2_equality ? "true" : "false") << '}';
  }
  return out.str();
}

std::string report_footer(const SweepSummary& s, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::csv) {
    out << "# total=" << s.total << " conj1_violations=" << s.conj1_violations
        << " conj2_violations=" << s.conj2_violations
        << " conj1_equalities=" << s.conj1_equalities
        << " conj2_equalities=" << s.conj2_equalities;
  } else {
    out << "{\"summary\":{\"total\":" << s.total << ",\"conj1_violations\":" << s.conj1_violations
        << ",\"conj2_violations\":" << s.conj2_violations
        << ",\"conj1_equalities\":" << s.conj1_equalities
        << ",\"conj2_equalities\":" << s.conj2_equalities << "}}";
  }
  return out.str();
}

ReportEmitter::ReportEmitter(std::ostream& out, ReportFormat format)
    : out_(out), format_(format) {
  if (format_ == ReportFormat::csv) out_ << report_csv_header() << '\n';
}

void ReportEmitter::row(const ConjectureReport& r) { out_ << report_row(r, format_) << '\n'; }

void ReportEmitter::finish(const SweepSummary& s) { out_ << report_footer(s, format_) << '\n'; }

}  // namespace lcc
