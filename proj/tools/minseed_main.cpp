#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minseed/bench.hpp"
#include "minseed/diffusion.hpp"
#include "minseed/graph.hpp"
#include "minseed/heuristics.hpp"
#include "minseed/oracle.hpp"
#include "minseed/pruning.hpp"

namespace {

struct SharedOptions {
  double theta = 0.4;
  double alpha = 0.6;
  std::string p_text;  // empty = subcommand default
  std::string manifest = "data/manifest.json";
  unsigned threads = 0;
};

minseed::PMode parse_p_or(const std::string& text, minseed::PMode fallback) {
  return text.empty() ? fallback : minseed::PMode::parse(text);
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%g", value);
  return buffer;
}

int handle_stats(const SharedOptions& shared, std::string manifest_path) {
  if (manifest_path.empty()) manifest_path = shared.manifest;
  const auto manifest = minseed::DatasetManifest::load(manifest_path);
  if (manifest.entries.empty()) throw minseed::input_error("manifest has no datasets");

  std::printf("%-14s %8s %9s %9s %14s %11s %7s\n", "dataset", "nodes", "edges", "density",
              "avg_triangles", "avg_degree", "avg_cc");
  bool any_missing = false;
  std::vector<std::string> problems;
  for (const auto& entry : manifest.entries) {
    if (!entry.available) {
      std::fprintf(stderr, "%s: missing %s (run tools/fetch_datasets.sh)\n", entry.name.c_str(),
                   entry.path.c_str());
      any_missing = true;
      continue;
    }
    const minseed::Graph g = minseed::Graph::load(entry.path);
    const minseed::NetworkStats stats = minseed::compute_stats(g);
    std::printf("%-14s %8llu %9llu %9.4f %14.4f %11.3f %7.3f\n", entry.name.c_str(),
                static_cast<unsigned long long>(stats.nodes),
                static_cast<unsigned long long>(stats.edges), minseed::round_to(stats.density, 4),
                minseed::round_to(stats.avg_triangles, 4), minseed::round_to(stats.avg_degree, 3),
                minseed::round_to(stats.avg_cc, 3));
    for (const auto& message : minseed::stats_mismatches(stats, entry.expected_stats)) {
      problems.push_back(entry.name + ": " + message);
    }
  }
  for (const auto& problem : problems) std::fprintf(stderr, "mismatch %s\n", problem.c_str());
  if (any_missing) std::fprintf(stderr, "missing datasets were skipped\n");
  return problems.empty() ? 0 : 1;
}

int handle_run(const SharedOptions& shared, const std::string& dataset,
               const std::string& heuristic, bool no_prune, bool show_seeds) {
  const auto manifest = minseed::DatasetManifest::load(shared.manifest);
  minseed::DatasetManifest selected;
  if (dataset == "all") {
    selected = manifest;
  } else {
    const minseed::DatasetEntry* entry = manifest.find(dataset);
    if (entry == nullptr) throw minseed::input_error("unknown dataset: " + dataset);
    selected.entries.push_back(*entry);
  }

  std::vector<std::string> ids;
  if (heuristic == "all") {
    ids = minseed::heuristic_ids();
  } else {
    ids.push_back(heuristic);  // run_experiment rejects unknown ids
  }

  minseed::BenchConfig cfg;
  cfg.theta = shared.theta;
  cfg.alpha = shared.alpha;
  cfg.p = parse_p_or(shared.p_text, minseed::PMode{minseed::PMode::Kind::unbounded, 0});

  minseed::ExperimentOptions options;
  options.prune = !no_prune;
  options.keep_seeds = show_seeds;
  options.threads = shared.threads;
  const auto records = minseed::run_experiment(selected, ids, {cfg}, options);

  bool any_invalid = false;
  bool any_ok = false;
  for (const auto& record : records) {
    if (!record.error.empty()) {
      std::fprintf(stderr, "dataset=%s heuristic=%s error: %s\n", record.dataset.c_str(),
                   record.heuristic.c_str(), record.error.c_str());
      continue;
    }
    any_ok = true;
    if (!record.valid) any_invalid = true;
    std::cout << "dataset=" << record.dataset << " heuristic=" << record.heuristic
              << " theta=" << format_number(record.theta)
              << " alpha=" << format_number(record.alpha) << " p=" << record.p_mode
              << " raw=" << record.raw_size << " pruned=" << record.pruned_size
              << " valid=" << (record.valid ? "yes" : "no") << " digest=" << record.digest;
    if (show_seeds) {
      std::cout << " seeds=";
      for (std::size_t i = 0; i < record.seed_labels.size(); ++i) {
        if (i != 0) std::cout << ',';
        std::cout << record.seed_labels[i];
      }
    }
    std::cout << '\n';
  }
  if (any_invalid) return 1;
  if (!any_ok) throw minseed::input_error("no dataset could be processed");
  return 0;
}

int handle_bench(const SharedOptions& shared, const std::string& reference_path,
                 const std::string& out_path, const std::string& format_text) {
  const auto manifest = minseed::DatasetManifest::load(shared.manifest);

  std::vector<minseed::BenchConfig> grid;
  if (!shared.p_text.empty()) {
    grid.push_back({shared.theta, shared.alpha, minseed::PMode::parse(shared.p_text)});
  } else {
    grid.push_back({shared.theta, shared.alpha, minseed::PMode::fixed(3)});
    grid.push_back(
        {shared.theta, shared.alpha, minseed::PMode{minseed::PMode::Kind::graph_diameter, 0}});
  }

  std::optional<minseed::ReferenceTable> reference;
  if (!reference_path.empty()) reference = minseed::ReferenceTable::load(reference_path);

  minseed::ExperimentOptions options;
  options.threads = shared.threads;
  const auto records = minseed::run_experiment(manifest, minseed::heuristic_ids(), grid, options);

  std::set<std::string> skipped;
  for (const auto& record : records) {
    if (!record.error.empty()) skipped.insert(record.dataset + ": " + record.error);
  }
  for (const auto& note : skipped) std::fprintf(stderr, "skipping %s\n", note.c_str());

  const auto format =
      format_text == "markdown" ? minseed::ReportFormat::markdown : minseed::ReportFormat::csv;
  const minseed::ReferenceTable* reference_ptr = reference ? &*reference : nullptr;
  if (out_path.empty() || out_path == "-") {
    minseed::emit_report(records, reference_ptr, format, std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw minseed::input_error("cannot open output file " + out_path);
    minseed::emit_report(records, reference_ptr, format, out);
  }
  return 0;
}

int handle_oracle(const SharedOptions& shared, const std::string& graph_path,
                  unsigned max_vertices, bool audit) {
  const minseed::Graph g = minseed::Graph::load(graph_path);
  const minseed::PMode p =
      parse_p_or(shared.p_text, minseed::PMode{minseed::PMode::Kind::unbounded, 0});

  minseed::ThresholdConfig cfg;
  cfg.theta = shared.theta;
  cfg.alpha = shared.alpha;
  cfg.range = p.resolve(p.needs_diameter() ? minseed::diameter(g) : 0);
  cfg.validate();

  minseed::OracleLimits limits;
  limits.max_vertices = max_vertices;
  limits.audit_permutations = audit;
  const minseed::SeedList best = minseed::exact_min_seed(g, cfg, limits);

  std::printf("graph: %s (n=%u, m=%llu)\n", graph_path.c_str(), g.n(),
              static_cast<unsigned long long>(g.m()));
  std::printf("theta=%s alpha=%s p=%s\n", format_number(cfg.theta).c_str(),
              format_number(cfg.alpha).c_str(), p.to_string().c_str());
  std::printf("minimum seed set size: %zu\n", best.size());
  std::cout << "seeds:";
  for (minseed::vertex_t v : best) std::cout << ' ' << g.label(v);
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum influential seed sets under tiered threshold diffusion"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file mirroring the long option names");

  SharedOptions shared;
  app.add_option("--theta", shared.theta, "influence threshold fraction")->capture_default_str();
  app.add_option("--alpha", shared.alpha, "activation threshold fraction")->capture_default_str();
  app.add_option("--p", shared.p_text,
                 "propagation range: positive hop count, 'diameter', or 'unbounded'");
  app.add_option("--manifest", shared.manifest, "dataset manifest path")->capture_default_str();
  app.add_option("--threads", shared.threads, "worker threads (0 = hardware concurrency)")
      ->capture_default_str();

  auto* stats_cmd =
      app.add_subcommand("stats", "compute network statistics and check expected values");
  std::string stats_manifest;
  stats_cmd->add_option("manifest", stats_manifest, "manifest path (defaults to --manifest)");

  auto* run_cmd = app.add_subcommand("run", "construct and prune seed sets");
  std::string dataset = "all";
  std::string heuristic = "all";
  bool no_prune = false;
  bool show_seeds = false;
  run_cmd->add_option("--dataset", dataset, "dataset name or 'all'")->capture_default_str();
  run_cmd->add_option("--heuristic", heuristic, "heuristic id or 'all'")->capture_default_str();
  run_cmd->add_flag("--no-prune", no_prune, "report the raw construction without pruning");
  run_cmd->add_flag("--show-seeds", show_seeds, "append the seed labels to each record");

  auto* bench_cmd =
      app.add_subcommand("bench", "run the experiment grid and emit a comparison report");
  std::string reference_path;
  std::string out_path;
  std::string format_text = "csv";
  bench_cmd->add_option("--reference", reference_path, "published seed-set sizes CSV");
  bench_cmd->add_option("--out", out_path, "output path ('-' or empty writes to stdout)");
  bench_cmd->add_option("--format", format_text, "report format")
      ->check(CLI::IsMember({"csv", "markdown"}))
      ->capture_default_str();

  auto* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive minimum seed set for small graphs");
  std::string graph_path;
  unsigned max_vertices = 16;
  bool audit = false;
  oracle_cmd->add_option("--graph", graph_path, "edge list path")->required();
  oracle_cmd->add_option("--max-vertices", max_vertices, "refuse larger graphs")
      ->capture_default_str();
  oracle_cmd->add_flag("--audit", audit,
                       "for n <= 8, also search insertion orders of smaller subsets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (stats_cmd->parsed()) return handle_stats(shared, stats_manifest);
    if (run_cmd->parsed()) return handle_run(shared, dataset, heuristic, no_prune, show_seeds);
    if (bench_cmd->parsed()) return handle_bench(shared, reference_path, out_path, format_text);
    if (oracle_cmd->parsed()) return handle_oracle(shared, graph_path, max_vertices, audit);
  } catch (const minseed::validation_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const minseed::input_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
