#pragma once

#include "minseed/diffusion.hpp"
#include "minseed/graph.hpp"

namespace minseed {

// Redundant-seed removal: sweep the list in reverse insertion order, drop any
// seed whose removal keeps the graph fully influenced (each check is a cold
// re-diffusion of the reduced list), and repeat the sweep until a full pass
// removes nothing. Under a bounded range a removal can unlock earlier
// removals, so a single sweep does not guarantee 1-minimality; the fixpoint
// does. Throws when the input list is not a cover.
SeedList prune(const Graph& g, const ThresholdConfig& cfg, const SeedList& shat);

}  // namespace minseed
