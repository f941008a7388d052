#include "minseed/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace minseed {

DiffusionState reference_diffusion(const Graph& g, const ThresholdConfig& cfg,
                                   const SeedList& seeds) {
  cfg.validate();
  validate_seed_list(g, seeds);
  DiffusionState state(g);

  for (vertex_t seed : seeds) {
    if (state.activated[seed] && state.depth[seed] == 0) continue;
    if (!state.influenced[seed]) {
      state.influenced[seed] = 1;
      ++state.influenced_count;
    }
    if (!state.activated[seed]) {
      state.activated[seed] = 1;
      ++state.activated_count;
    }
    state.depth[seed] = 0;
    state.relay_closed[seed] = 0;

    // Whole-level rounds instead of a per-contact queue: every relayer of
    // depth d contributes at once, then the batch is settled. Credits are
    // capped at the activation need because the engine stops crediting a
    // vertex the moment it activates.
    std::vector<vertex_t> frontier{seed};
    std::uint32_t depth = 0;
    while (!frontier.empty() && cfg.range.allows_relay_at(depth)) {
      std::map<vertex_t, std::uint32_t> contacts;
      for (vertex_t x : frontier) {
        for (vertex_t w : g.neighbors(x)) {
          if (!state.activated[w]) ++contacts[w];
        }
      }
      std::vector<vertex_t> next;
      for (const auto& [w, count] : contacts) {
        const VertexNeeds needs = thresholds_of(g, cfg, w);
        const std::uint32_t credits =
            std::min(state.credits[w] + count, needs.activation_need);
        state.credits[w] = credits;
        if (!state.influenced[w] && credits >= needs.influence_need) {
          state.influenced[w] = 1;
          ++state.influenced_count;
        }
        if (credits >= needs.activation_need) {
          state.activated[w] = 1;
          ++state.activated_count;
          state.depth[w] = depth + 1;
          if (cfg.range.allows_relay_at(depth + 1)) {
            next.push_back(w);
          } else {
            state.relay_closed[w] = 1;
          }
        }
      }
      frontier = std::move(next);
      ++depth;
    }
  }
  return state;
}

bool validate_seed_set(const Graph& g, const ThresholdConfig& cfg, const SeedList& seeds) {
  return is_fully_influenced(g, reference_diffusion(g, cfg, seeds));
}

namespace {

bool next_combination(std::vector<vertex_t>& indices, vertex_t n) {
  const std::size_t k = indices.size();
  for (std::size_t i = k; i-- > 0;) {
    if (indices[i] + (k - i) < n) {
      ++indices[i];
      for (std::size_t j = i + 1; j < k; ++j) indices[j] = indices[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool order_dependent_cover_below(const Graph& g, const ThresholdConfig& cfg, std::uint32_t size) {
  for (std::uint32_t k = 0; k < size; ++k) {
    std::vector<vertex_t> subset(k);
    for (std::uint32_t i = 0; i < k; ++i) subset[i] = i;
    bool more = k <= g.n();
    while (more) {
      SeedList order = subset;
      do {
        if (is_fully_influenced(g, run_diffusion(g, cfg, order))) return true;
      } while (std::next_permutation(order.begin(), order.end()));
      more = next_combination(subset, g.n());
    }
  }
  return false;
}

SeedList exact_min_seed(const Graph& g, const ThresholdConfig& cfg, const OracleLimits& limits) {
  cfg.validate();
  if (g.n() == 0) throw std::runtime_error("empty graph");
  if (g.n() > limits.max_vertices) throw std::runtime_error("instance too large for oracle");

  const std::uint32_t max_k = std::min<std::uint32_t>(g.n(), limits.max_seed_size);
  for (std::uint32_t k = 0; k <= max_k; ++k) {
    std::vector<vertex_t> subset(k);
    for (std::uint32_t i = 0; i < k; ++i) subset[i] = i;
    bool more = true;
    while (more) {
      if (is_fully_influenced(g, run_diffusion(g, cfg, subset))) {
        if (limits.audit_permutations && g.n() <= 8 &&
            order_dependent_cover_below(g, cfg, k)) {
          std::fprintf(stderr,
                       "oracle: an insertion order beats the ascending-id minimum %u\n", k);
        }
        return subset;
      }
      more = next_combination(subset, g.n());
    }
  }
  throw std::runtime_error("no feasible seed set within size limit");
}

}  // namespace minseed
