#pragma once

#include <cstdint>

#include "minseed/diffusion.hpp"
#include "minseed/graph.hpp"

namespace minseed {

struct OracleLimits {
  std::uint32_t max_vertices = 16;
  std::uint32_t max_seed_size = static_cast<std::uint32_t>(-1);
  // For n <= 8, additionally try every insertion order of every smaller
  // subset and report to stderr if one beats the ascending-id minimum.
  bool audit_permutations = false;
};

// Independently written diffusion: levelized set iteration per seed (whole
// frontier relays at once, credits capped at the activation need) instead of
// the engine's per-contact FIFO queue. Exists to cross-check the engine;
// produces a bit-identical DiffusionState.
DiffusionState reference_diffusion(const Graph& g, const ThresholdConfig& cfg,
                                   const SeedList& seeds);

// True iff the seed list fully influences g, decided by the reference
// implementation above.
bool validate_seed_set(const Graph& g, const ThresholdConfig& cfg, const SeedList& seeds);

// Smallest feasible seed set under ascending-id insertion order: subsets are
// enumerated by cardinality, lexicographically within each cardinality, and
// the first one whose diffusion fully influences g wins. Because diffusion
// folds seeds sequentially, "minimum" is relative to that fixed order; the
// audit flag measures how often that matters.
SeedList exact_min_seed(const Graph& g, const ThresholdConfig& cfg,
                        const OracleLimits& limits = {});

// True when some insertion order of some subset smaller than `size` fully
// influences g. Exhaustive; callers guard with n <= 8.
bool order_dependent_cover_below(const Graph& g, const ThresholdConfig& cfg, std::uint32_t size);

}  // namespace minseed
