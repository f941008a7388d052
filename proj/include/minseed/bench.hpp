#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "minseed/diffusion.hpp"
#include "minseed/graph.hpp"

namespace minseed {

// Bad user input (flags, manifests, reference files): CLI exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed result failed its feasibility check: CLI exit code 1.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Propagation-range mode as written on the command line / in reports:
// a positive hop count, "diameter" (resolved per graph), or "unbounded".
struct PMode {
  enum class Kind { fixed_hops, graph_diameter, unbounded };

  static PMode fixed(std::uint32_t hops) { return {Kind::fixed_hops, hops}; }
  static PMode parse(const std::string& text);  // throws input_error
  std::string to_string() const;
  PropagationRange resolve(std::uint32_t graph_diameter) const;
  bool needs_diameter() const { return kind == Kind::graph_diameter; }

  Kind kind = Kind::unbounded;
  std::uint32_t hops = 0;
};

struct BenchConfig {
  double theta = 0.4;
  double alpha = 0.6;
  PMode p;
};

struct DatasetEntry {
  std::string name;
  std::string path;    // resolved relative to the manifest's directory
  std::string format;  // "edgelist"
  bool available = false;
  // Expected statistics by field name (nodes, edges, density, avg_triangles,
  // avg_degree, avg_cc); only provided fields are checked.
  std::vector<std::pair<std::string, double>> expected_stats;
};

struct DatasetManifest {
  static DatasetManifest load(const std::string& path);  // throws input_error
  const DatasetEntry* find(const std::string& name) const;
  std::vector<DatasetEntry> entries;
};

// Published seed-set sizes keyed by (dataset, p-mode, column), where column
// is one of: dfs-greedy, bfs-greedy, dfs-pruned, bfs-pruned, bbh, adh, cfh.
struct ReferenceTable {
  static ReferenceTable load(const std::string& path);  // throws input_error
  std::optional<std::uint64_t> size_of(const std::string& dataset, const std::string& p_mode,
                                       const std::string& column) const;
  std::map<std::tuple<std::string, std::string, std::string>, std::uint64_t> sizes;
};

struct RunRecord {
  std::string dataset;
  std::string heuristic;
  double theta = 0.0;
  double alpha = 0.0;
  std::string p_mode;
  std::uint64_t raw_size = 0;
  std::uint64_t pruned_size = 0;
  bool valid = false;
  double wall_ms = 0.0;         // measured, deliberately absent from reports
  std::string digest;           // FNV-1a 64 over the reported seed labels
  std::vector<std::string> seed_labels;  // filled only when keep_seeds is set
  std::string error;            // nonempty marks a record-level failure
};

struct ExperimentOptions {
  bool prune = true;
  bool keep_seeds = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// One record per (dataset, heuristic, config), in that nesting order. A
// dataset that fails to load yields error records for its jobs and the run
// continues; an unknown heuristic id throws immediately. Deterministic for
// identical inputs regardless of thread count.
std::vector<RunRecord> run_experiment(const DatasetManifest& manifest,
                                      const std::vector<std::string>& heuristics,
                                      const std::vector<BenchConfig>& configs,
                                      const ExperimentOptions& options = {});

enum class ReportFormat { csv, markdown };

// Pivot of the records: one row per (dataset, p-mode), heuristic columns in
// the fixed order dfs-greedy, bfs-greedy, dfs-pruned, bfs-pruned, bbh, adh,
// cfh. With a reference table each cell carries the published size and the
// relative deviation (ours - ref)/ref to 3 decimals. Byte-stable for
// identical records; throws validation_error on any invalid record.
void emit_report(const std::vector<RunRecord>& records, const ReferenceTable* reference,
                 ReportFormat format, std::ostream& out);

// (computed - expected) checks after display rounding; returns messages,
// empty when everything provided matches within +/-0.0005.
std::vector<std::string> stats_mismatches(const NetworkStats& computed,
                                          const std::vector<std::pair<std::string, double>>& expected);

std::string fnv1a_digest(const std::vector<std::string>& parts);

}  // namespace minseed
