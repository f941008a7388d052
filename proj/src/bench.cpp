#include "minseed/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "minseed/heuristics.hpp"
#include "minseed/oracle.hpp"
#include "minseed/pruning.hpp"

namespace minseed {

namespace {

// Report columns in their fixed order; raw columns draw from raw_size,
// the rest from pruned_size.
struct Column {
  const char* name;
  const char* heuristic;
  bool raw;
};
constexpr Column kColumns[] = {
    {"dfs-greedy", "dfs-greedy", true}, {"bfs-greedy", "bfs-greedy", true},
    {"dfs-pruned", "dfs-greedy", false}, {"bfs-pruned", "bfs-greedy", false},
    {"bbh", "bbh", false},              {"adh", "adh", false},
    {"cfh", "cfh", false},
};

const std::vector<std::pair<std::string, int>>& stat_fields() {
  static const std::vector<std::pair<std::string, int>> fields = {
      {"nodes", 0},        {"edges", 0},      {"density", 4},
      {"avg_triangles", 4}, {"avg_degree", 3}, {"avg_cc", 3},
  };
  return fields;
}

double stat_field_value(const NetworkStats& stats, const std::string& name) {
  if (name == "nodes") return static_cast<double>(stats.nodes);
  if (name == "edges") return static_cast<double>(stats.edges);
  if (name == "density") return stats.density;
  if (name == "avg_triangles") return stats.avg_triangles;
  if (name == "avg_degree") return stats.avg_degree;
  if (name == "avg_cc") return stats.avg_cc;
  throw input_error("unknown stats field: " + name);
}

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  cells.push_back(current);
  return cells;
}

}  // namespace

PMode PMode::parse(const std::string& text) {
  if (text == "diameter") return {Kind::graph_diameter, 0};
  if (text == "unbounded") return {Kind::unbounded, 0};
  try {
    std::size_t used = 0;
    const long value = std::stol(text, &used);
    if (used == text.size() && value >= 1) {
      return {Kind::fixed_hops, static_cast<std::uint32_t>(value)};
    }
  } catch (const std::exception&) {
  }
  throw input_error("invalid propagation range '" + text +
                    "' (expected a positive integer, 'diameter', or 'unbounded')");
}

std::string PMode::to_string() const {
  switch (kind) {
    case Kind::fixed_hops:
      return std::to_string(hops);
    case Kind::graph_diameter:
      return "diameter";
    case Kind::unbounded:
      return "unbounded";
  }
  return "unbounded";
}

PropagationRange PMode::resolve(std::uint32_t graph_diameter) const {
  switch (kind) {
    case Kind::fixed_hops:
      return PropagationRange::bounded(hops);
    case Kind::graph_diameter:
      // A zero-diameter graph (single vertex / no edges) still needs a legal
      // bounded range.
      return PropagationRange::bounded(std::max<std::uint32_t>(1, graph_diameter));
    case Kind::unbounded:
      return PropagationRange::unbounded();
  }
  return PropagationRange::unbounded();
}

DatasetManifest DatasetManifest::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open manifest " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("manifest " + path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("datasets") || !doc["datasets"].is_array()) {
    throw input_error("manifest " + path + ": expected {\"datasets\": [...]}");
  }

  const auto base = std::filesystem::path(path).parent_path();
  DatasetManifest manifest;
  std::set<std::string> names;
  for (const auto& item : doc["datasets"]) {
    DatasetEntry entry;
    entry.name = item.value("name", "");
    if (entry.name.empty()) throw input_error("manifest entry without a name");
    if (!names.insert(entry.name).second) {
      throw input_error("duplicate dataset name: " + entry.name);
    }
    std::string raw_path = item.value("path", "");
    if (raw_path.empty()) throw input_error("dataset " + entry.name + " has no path");
    std::filesystem::path resolved(raw_path);
    if (resolved.is_relative()) resolved = base / resolved;
    entry.path = resolved.string();
    entry.format = item.value("format", "edgelist");
    if (entry.format != "edgelist") {
      throw input_error("dataset " + entry.name + ": unsupported format " + entry.format);
    }
    entry.available = std::filesystem::exists(resolved);
    if (item.contains("expected_stats")) {
      const auto& expected = item["expected_stats"];
      if (!expected.is_object()) {
        throw input_error("dataset " + entry.name + ": expected_stats must be an object");
      }
      for (const auto& [field, decimals] : stat_fields()) {
        (void)decimals;
        if (expected.contains(field)) {
          entry.expected_stats.emplace_back(field, expected[field].get<double>());
        }
      }
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

const DatasetEntry* DatasetManifest::find(const std::string& name) const {
  for (const auto& entry : entries) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

ReferenceTable ReferenceTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open reference table " + path);
  ReferenceTable table;
  std::string line;
  std::uint64_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split_csv_line(line);
    if (!header_seen) {
      if (cells != std::vector<std::string>{"dataset", "p", "column", "size"}) {
        throw input_error(path + ": expected header dataset,p,column,size");
      }
      header_seen = true;
      continue;
    }
    if (cells.size() != 4) {
      throw input_error(path + " line " + std::to_string(lineno) + ": expected 4 cells");
    }
    bool known_column = false;
    for (const auto& column : kColumns) known_column |= cells[2] == column.name;
    if (!known_column) {
      throw input_error(path + " line " + std::to_string(lineno) + ": unknown column " + cells[2]);
    }
    const auto key = std::make_tuple(cells[0], cells[1], cells[2]);
    if (table.sizes.count(key) != 0) {
      throw input_error(path + " line " + std::to_string(lineno) + ": duplicate key");
    }
    table.sizes[key] = std::stoull(cells[3]);
  }
  if (!header_seen) throw input_error(path + ": empty reference table");
  return table;
}

std::optional<std::uint64_t> ReferenceTable::size_of(const std::string& dataset,
                                                     const std::string& p_mode,
                                                     const std::string& column) const {
  const auto it = sizes.find(std::make_tuple(dataset, p_mode, column));
  if (it == sizes.end()) return std::nullopt;
  return it->second;
}

std::string fnv1a_digest(const std::vector<std::string>& parts) {
  std::uint64_t hash = 1469598103934665603ULL;
  auto mix = [&hash](char c) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ULL;
  };
  for (const auto& part : parts) {
    for (char c : part) mix(c);
    mix('\n');
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

std::vector<std::string> stats_mismatches(
    const NetworkStats& computed, const std::vector<std::pair<std::string, double>>& expected) {
  std::vector<std::string> messages;
  for (const auto& [field, want] : expected) {
    int decimals = 0;
    for (const auto& [name, dec] : stat_fields()) {
      if (name == field) decimals = dec;
    }
    const double got = round_to(stat_field_value(computed, field), decimals);
    if (std::abs(got - want) > 0.0005 + 1e-12) {
      messages.push_back(field + " computed " + format_fixed(got, decimals) + " expected " +
                         format_fixed(want, decimals));
    }
  }
  return messages;
}

std::vector<RunRecord> run_experiment(const DatasetManifest& manifest,
                                      const std::vector<std::string>& heuristics,
                                      const std::vector<BenchConfig>& configs,
                                      const ExperimentOptions& options) {
  for (const auto& id : heuristics) {
    if (std::find(heuristic_ids().begin(), heuristic_ids().end(), id) == heuristic_ids().end()) {
      throw input_error("unknown heuristic id: " + id);
    }
  }

  struct LoadedDataset {
    std::unique_ptr<Graph> graph;
    std::uint32_t diameter = 0;
    std::string error;
  };
  const bool wants_diameter =
      std::any_of(configs.begin(), configs.end(),
                  [](const BenchConfig& cfg) { return cfg.p.needs_diameter(); });

  std::vector<LoadedDataset> loaded(manifest.entries.size());
  for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
    const DatasetEntry& entry = manifest.entries[i];
    if (!entry.available) {
      loaded[i].error = "file not found: " + entry.path;
      continue;
    }
    try {
      loaded[i].graph = std::make_unique<Graph>(Graph::load(entry.path));
      if (wants_diameter) loaded[i].diameter = diameter(*loaded[i].graph);
    } catch (const std::exception& e) {
      loaded[i].graph.reset();
      loaded[i].error = e.what();
    }
  }

  struct Job {
    std::size_t dataset = 0;
    std::size_t heuristic = 0;
    std::size_t config = 0;
  };
  std::vector<Job> jobs;
  for (std::size_t d = 0; d < manifest.entries.size(); ++d) {
    for (std::size_t h = 0; h < heuristics.size(); ++h) {
      for (std::size_t c = 0; c < configs.size(); ++c) jobs.push_back({d, h, c});
    }
  }

  std::vector<RunRecord> records(jobs.size());
  std::atomic<std::size_t> next_job{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t index = next_job.fetch_add(1);
      if (index >= jobs.size()) return;
      const Job& job = jobs[index];
      const DatasetEntry& entry = manifest.entries[job.dataset];
      const BenchConfig& bench_cfg = configs[job.config];

      RunRecord record;
      record.dataset = entry.name;
      record.heuristic = heuristics[job.heuristic];
      record.theta = bench_cfg.theta;
      record.alpha = bench_cfg.alpha;
      record.p_mode = bench_cfg.p.to_string();
      const LoadedDataset& data = loaded[job.dataset];
      if (!data.error.empty()) {
        record.error = data.error;
        records[index] = std::move(record);
        continue;
      }
      try {
        const Graph& g = *data.graph;
        ThresholdConfig cfg{bench_cfg.theta, bench_cfg.alpha, bench_cfg.p.resolve(data.diameter)};
        cfg.validate();
        const auto started = std::chrono::steady_clock::now();
        SeedList raw = construct_by_id(g, cfg, record.heuristic);
        SeedList reported = options.prune ? prune(g, cfg, raw) : raw;
        record.wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
        record.raw_size = raw.size();
        record.pruned_size = reported.size();
        record.valid = validate_seed_set(g, cfg, reported);
        std::vector<std::string> labels;
        labels.reserve(reported.size());
        for (vertex_t v : reported) labels.push_back(g.label(v));
        record.digest = fnv1a_digest(labels);
        if (options.keep_seeds) record.seed_labels = std::move(labels);
      } catch (const std::exception& e) {
        record.error = e.what();
      }
      records[index] = std::move(record);
    }
  };

  std::size_t thread_count =
      options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  if (thread_count == 0) thread_count = 1;
  thread_count = std::min(thread_count, jobs.empty() ? std::size_t{1} : jobs.size());
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  return records;
}

void emit_report(const std::vector<RunRecord>& records, const ReferenceTable* reference,
                 ReportFormat format, std::ostream& out) {
  std::vector<const RunRecord*> usable;
  for (const auto& record : records) {
    if (!record.error.empty()) continue;  // dataset never loaded; skipped
    if (!record.valid) {
      throw validation_error("refusing to tabulate infeasible seed set: " + record.dataset + "/" +
                             record.heuristic + " p=" + record.p_mode);
    }
    usable.push_back(&record);
  }
  if (usable.empty()) throw validation_error("no records to report");

  // (dataset, p-mode) -> column values
  std::map<std::pair<std::string, std::string>, std::array<std::optional<std::uint64_t>,
                                                           std::size(kColumns)>>
      rows;
  for (const RunRecord* record : usable) {
    auto& row = rows[{record->dataset, record->p_mode}];
    for (std::size_t c = 0; c < std::size(kColumns); ++c) {
      if (kColumns[c].heuristic == record->heuristic) {
        row[c] = kColumns[c].raw ? record->raw_size : record->pruned_size;
      }
    }
  }

  auto reference_cell = [&](const std::string& dataset, const std::string& p_mode,
                            std::size_t column) -> std::optional<std::uint64_t> {
    if (reference == nullptr) return std::nullopt;
    return reference->size_of(dataset, p_mode, kColumns[column].name);
  };
  auto deviation = [](std::uint64_t ours, std::uint64_t ref) {
    return format_fixed((static_cast<double>(ours) - static_cast<double>(ref)) /
                            static_cast<double>(ref),
                        3);
  };

  if (format == ReportFormat::csv) {
    out << "dataset,p";
    for (const auto& column : kColumns) {
      out << ',' << column.name;
      if (reference != nullptr) {
        out << ',' << column.name << "_ref," << column.name << "_dev";
      }
    }
    out << '\n';
    for (const auto& [key, row] : rows) {
      out << key.first << ',' << key.second;
      for (std::size_t c = 0; c < std::size(kColumns); ++c) {
        out << ',';
        if (row[c]) out << *row[c];
        if (reference != nullptr) {
          const auto ref = reference_cell(key.first, key.second, c);
          out << ',';
          if (ref) out << *ref;
          out << ',';
          if (row[c] && ref) out << deviation(*row[c], *ref);
        }
      }
      out << '\n';
    }
    return;
  }

  out << "| dataset | p |";
  for (const auto& column : kColumns) out << ' ' << column.name << " |";
  out << "\n|---|---|";
  for (std::size_t c = 0; c < std::size(kColumns); ++c) out << "---|";
  out << '\n';
  for (const auto& [key, row] : rows) {
    out << "| " << key.first << " | " << key.second << " |";
    for (std::size_t c = 0; c < std::size(kColumns); ++c) {
      out << ' ';
      if (row[c]) {
        out << *row[c];
        const auto ref = reference_cell(key.first, key.second, c);
        if (ref) out << " (ref " << *ref << ", " << deviation(*row[c], *ref) << ")";
      } else {
        out << '-';
      }
      out << " |";
    }
    out << '\n';
  }
}

}  // namespace minseed
