#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minseed/diffusion.hpp"
#include "minseed/graph.hpp"

namespace minseed {

// Vertices proposed as the next spreaders; duplicate-free, all inactive at
// selection time.
using CandidateList = std::vector<vertex_t>;

// Inactive-degree of every vertex: the count of its non-activated neighbors
// (0 for activated vertices, whose value is never consulted).
std::vector<std::uint32_t> inactive_degrees(const Graph& g, const DiffusionState& state);

// Up to ceil(sum-of-inactive-degrees / inactive-count) vertices (at least 1),
// picked by maximum inactive-degree among non-activated vertices, ties to the
// smallest dense id. Throws when no inactive vertex remains.
CandidateList most_inactive_candidates(const Graph& g, const DiffusionState& state);

// Average-degree heuristic: repeatedly seed a batch of most-inactive
// candidates, skipping members a previous batch mate already activated, and
// stop as soon as the graph is fully influenced.
SeedList adh_construct(const Graph& g, const ThresholdConfig& cfg);

// Closest-first heuristic: after a global most-inactive first pick, prefer
// the most-inactive vertex within two hops of the current seeds, falling back
// to the global argmax when that pool is exhausted.
SeedList cfh_construct(const Graph& g, const ThresholdConfig& cfg);

enum class BfsTreeWeighting {
  // Each discovered vertex adds its own inactive-degree to its parent's
  // accumulated weight, so a tree scores by its dominant path.
  path_accumulated,
  // Compatibility variant: every tree vertex carries the root weight
  // unchanged, collapsing the score to "max inactive-degree root".
  root_carried,
};

struct BfsTreeScore {
  std::vector<vertex_t> root_of;       // kNoVertex where undiscovered
  std::vector<std::uint64_t> weight;   // accumulated weight where discovered
  vertex_t best_vertex = kNoVertex;
  vertex_t best_root = kNoVertex;
  std::uint64_t best_weight = 0;
};

// One multi-source FIFO BFS over inactive vertices only, all roots enqueued
// up front with weight = own inactive-degree. Ties on best weight go to the
// smallest vertex id, then the smallest root id.
BfsTreeScore score_bfs_trees(const Graph& g, const DiffusionState& state,
                             const CandidateList& roots,
                             BfsTreeWeighting weighting = BfsTreeWeighting::path_accumulated);

vertex_t heaviest_bfs_root(const Graph& g, const DiffusionState& state,
                           const CandidateList& roots,
                           BfsTreeWeighting weighting = BfsTreeWeighting::path_accumulated);

// Backbone heuristic: each round seeds the candidate owning the heaviest BFS
// tree over the inactive subgraph.
SeedList bbh_construct(const Graph& g, const ThresholdConfig& cfg,
                       BfsTreeWeighting weighting = BfsTreeWeighting::path_accumulated);

enum class TraversalMode { breadth_first, depth_first };

// Baseline greedy: walk each component from its maximum-degree vertex
// (components largest first, neighbor expansion by descending degree then
// ascending id) and seed every visited vertex that is not yet influenced.
SeedList traversal_greedy_construct(const Graph& g, const ThresholdConfig& cfg,
                                    TraversalMode mode);

// Stable CLI/report identifiers: dfs-greedy, bfs-greedy, adh, cfh, bbh.
const std::vector<std::string>& heuristic_ids();
SeedList construct_by_id(const Graph& g, const ThresholdConfig& cfg, const std::string& id);

}  // namespace minseed
