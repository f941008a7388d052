#include "minseed/pruning.hpp"

#include <stdexcept>

namespace minseed {

SeedList prune(const Graph& g, const ThresholdConfig& cfg, const SeedList& shat) {
  if (!is_fully_influenced(g, run_diffusion(g, cfg, shat))) {
    throw std::runtime_error("seed list not a cover");
  }

  SeedList current = shat;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = current.size(); pos-- > 0;) {
      SeedList reduced;
      reduced.reserve(current.size() - 1);
      for (std::size_t i = 0; i < current.size(); ++i) {
        if (i != pos) reduced.push_back(current[i]);
      }
      if (is_fully_influenced(g, run_diffusion(g, cfg, reduced))) {
        current = std::move(reduced);
        changed = true;
      }
    }
  }
  return current;
}

}  // namespace minseed
