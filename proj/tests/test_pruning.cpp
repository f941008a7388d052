#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "minseed/heuristics.hpp"
#include "minseed/oracle.hpp"
#include "minseed/pruning.hpp"

using minseed::Graph;
using minseed::PropagationRange;
using minseed::SeedList;
using minseed::ThresholdConfig;
using minseed::vertex_t;

namespace {

const ThresholdConfig kDefault{0.4, 0.6, PropagationRange::unbounded()};

bool is_subsequence(const SeedList& part, const SeedList& whole) {
  std::size_t i = 0;
  for (vertex_t v : whole) {
    if (i < part.size() && part[i] == v) ++i;
  }
  return i == part.size();
}

}  // namespace

TEST_CASE("a triangle collapses to its first seed") {
  const Graph g = testutil::complete_graph(3);
  CHECK(minseed::prune(g, kDefault, {0, 1, 2}) == SeedList{0});
}

TEST_CASE("walkthrough list keeps five of its seven seeds") {
  const Graph g = testutil::demo14();
  const auto cfg = ThresholdConfig{0.4, 0.6, PropagationRange::bounded(3)};
  const SeedList bloated = {5, 1, 4, 9, 8, 10, 6};
  REQUIRE(minseed::validate_seed_set(g, cfg, bloated));

  const SeedList pruned = minseed::prune(g, cfg, bloated);
  CHECK(pruned == SeedList{1, 4, 9, 10, 6});

  // The reverse sweep also discards 8 (reached through 5's activation once 1
  // and 4 fire); the six-seed list that keeps it is a valid cover too, just
  // not what the sweep produces.
  CHECK(minseed::validate_seed_set(g, cfg, {1, 4, 9, 8, 10, 6}));
}

TEST_CASE("pruning removes nothing from an already minimal list") {
  const Graph g = testutil::path_graph(5);
  const auto cfg = ThresholdConfig{1.0, 1.0, PropagationRange::unbounded()};
  const SeedList minimal = {1, 3};
  REQUIRE(minseed::validate_seed_set(g, cfg, minimal));
  CHECK(minseed::prune(g, cfg, minimal) == minimal);
}

TEST_CASE("pruning rejects a list that never covered the graph") {
  const Graph g = testutil::path_graph(5);
  const auto cfg = ThresholdConfig{1.0, 1.0, PropagationRange::unbounded()};
  CHECK_THROWS_WITH(minseed::prune(g, cfg, {2}), doctest::Contains("not a cover"));
}

TEST_CASE("a bounded range can need a second sweep to reach minimality") {
  // Found by random search: after the first reverse sweep removes 3 and 8,
  // seed 6 — kept by that sweep — becomes removable.
  const Graph g = testutil::make_graph(10, {{0, 6},
                                            {0, 8},
                                            {0, 9},
                                            {1, 5},
                                            {2, 6},
                                            {3, 8},
                                            {3, 9},
                                            {4, 5},
                                            {4, 7},
                                            {5, 6},
                                            {5, 8},
                                            {6, 9},
                                            {7, 8},
                                            {8, 9}});
  const auto cfg = ThresholdConfig{0.5, 0.5, PropagationRange::bounded(2)};
  const SeedList seeds = {0, 4, 3, 5, 6, 8};
  REQUIRE(minseed::validate_seed_set(g, cfg, seeds));

  const SeedList pruned = minseed::prune(g, cfg, seeds);
  CHECK(pruned == SeedList{0, 4, 5});
  // One sweep alone would have stopped at {0, 4, 5, 6}.
  CHECK(minseed::validate_seed_set(g, cfg, {0, 4, 5, 6}));
}

TEST_CASE("pruned output is a subsequence of the input") {
  std::mt19937 rng(20240815);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testutil::random_graph(rng, 4 + trial % 8, 0.4);
    const auto cfg = trial % 2 == 0 ? ThresholdConfig{0.5, 0.5, PropagationRange::bounded(2)}
                                    : kDefault;
    const auto raw = minseed::adh_construct(g, cfg);
    const auto pruned = minseed::prune(g, cfg, raw);
    CHECK(is_subsequence(pruned, raw));
    CHECK(pruned.size() <= raw.size());
  }
}

TEST_CASE("pruning is one-minimal and idempotent on random instances") {
  std::mt19937 rng(20240816);
  const double probabilities[] = {0.2, 0.4, 0.7};
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testutil::random_graph(rng, 3 + trial % 9, probabilities[trial % 3]);
    ThresholdConfig cfg = kDefault;
    if (trial % 3 == 1) cfg = ThresholdConfig{0.5, 0.5, PropagationRange::bounded(1)};
    if (trial % 3 == 2) cfg = ThresholdConfig{1.0, 1.0, PropagationRange::bounded(2)};

    for (const auto& id : minseed::heuristic_ids()) {
      const auto raw = minseed::construct_by_id(g, cfg, id);
      const auto pruned = minseed::prune(g, cfg, raw);
      CHECK(minseed::validate_seed_set(g, cfg, pruned));
      CHECK(minseed::prune(g, cfg, pruned) == pruned);
      for (std::size_t drop = 0; drop < pruned.size(); ++drop) {
        SeedList reduced;
        for (std::size_t i = 0; i < pruned.size(); ++i) {
          if (i != drop) reduced.push_back(pruned[i]);
        }
        CHECK_FALSE(minseed::validate_seed_set(g, cfg, reduced));
      }
    }
  }
}

TEST_CASE("pruning the club baselines reproduces the published band") {
  const Graph g = testutil::karate();
  const auto cfg = ThresholdConfig{0.4, 0.6, PropagationRange::bounded(3)};

  const auto dfs = minseed::traversal_greedy_construct(g, cfg, minseed::TraversalMode::depth_first);
  CHECK(minseed::prune(g, cfg, dfs).size() == 6);

  const auto bfs =
      minseed::traversal_greedy_construct(g, cfg, minseed::TraversalMode::breadth_first);
  const auto bfs_pruned = minseed::prune(g, cfg, bfs);
  CHECK(bfs_pruned.size() == 7);
  CHECK(testutil::labels_of(g, bfs_pruned) ==
        std::vector<std::string>{"34", "33", "32", "14", "28", "1", "6"});

  const auto adh = minseed::adh_construct(g, cfg);
  CHECK(testutil::labels_of(g, minseed::prune(g, cfg, adh)) ==
        std::vector<std::string>{"34", "1", "33", "3", "6", "24"});
}
