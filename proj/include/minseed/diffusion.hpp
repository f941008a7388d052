#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "minseed/graph.hpp"

namespace minseed {

// Hop budget for a cascade. A relayer sitting at depth d may forward only
// while d < hops; vertices that activate at depth == hops join the sets but
// never relay.
struct PropagationRange {
  static PropagationRange bounded(std::uint32_t hops) { return {true, hops}; }
  static PropagationRange unbounded() { return {false, 0}; }

  bool allows_relay_at(std::uint32_t depth) const { return !is_bounded || depth < hops; }
  std::string to_string() const;

  bool is_bounded = false;
  std::uint32_t hops = 0;

  bool operator==(const PropagationRange&) const = default;
};

struct ThresholdConfig {
  double theta = 0.4;  // influence fraction, 0 < theta <= alpha
  double alpha = 0.6;  // activation fraction, theta <= alpha <= 1
  PropagationRange range = PropagationRange::unbounded();

  void validate() const;  // throws std::runtime_error on violation
};

struct VertexNeeds {
  std::uint32_t influence_need = 1;
  std::uint32_t activation_need = 1;
};

// Integer credit thresholds: need = max(1, ceil(fraction * degree)). The
// max(1,.) floor makes isolated vertices reachable only by seeding.
VertexNeeds thresholds_of(const Graph& g, const ThresholdConfig& cfg, vertex_t v);

inline constexpr std::uint32_t kNoDepth = static_cast<std::uint32_t>(-1);

struct DiffusionState {
  explicit DiffusionState(const Graph& g)
      : influenced(g.n(), 0),
        activated(g.n(), 0),
        relay_closed(g.n(), 0),
        credits(g.n(), 0),
        depth(g.n(), kNoDepth) {}

  std::vector<std::uint8_t> influenced;
  std::vector<std::uint8_t> activated;
  std::vector<std::uint8_t> relay_closed;
  std::vector<std::uint32_t> credits;  // one per contact from a relaying neighbor
  std::vector<std::uint32_t> depth;    // hop depth at activation, 0 for seeds
  std::uint64_t influenced_count = 0;
  std::uint64_t activated_count = 0;

  bool operator==(const DiffusionState&) const = default;
};

// Ordered, duplicate-free list of spreader vertices. Order is load-bearing:
// diffusion folds seeds left to right and pruning walks them in reverse.
using SeedList = std::vector<vertex_t>;

// Throws if the list contains an out-of-range id or a duplicate.
void validate_seed_list(const Graph& g, const SeedList& seeds);

// Marks u influenced + activated at depth 0 and runs one FIFO breadth-first
// cascade. A dequeued relayer at depth d grants one credit per inactive
// neighbor at contact depth d+1; a neighbor whose credits reach its
// activation need activates at that contact depth. Seeding a vertex that was
// activated mid-cascade re-opens it as a depth-0 relayer; re-seeding a
// depth-0 seed is a no-op.
void seed_and_propagate(const Graph& g, const ThresholdConfig& cfg, DiffusionState& state,
                        vertex_t u);

// Left fold of seed_and_propagate over the list, starting from a fresh state.
DiffusionState run_diffusion(const Graph& g, const ThresholdConfig& cfg, const SeedList& seeds);

bool is_fully_influenced(const Graph& g, const DiffusionState& state);

// One line per vertex in dense-id order:
// vertex,label,influenced,activated,depth,credits  (depth "-" until activated)
void dump_state(const Graph& g, const DiffusionState& state, std::ostream& out);

}  // namespace minseed
