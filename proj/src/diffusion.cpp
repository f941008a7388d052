#include "minseed/diffusion.hpp"

#include <cmath>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

namespace minseed {

std::string PropagationRange::to_string() const {
  return is_bounded ? std::to_string(hops) : "unbounded";
}

void ThresholdConfig::validate() const {
  if (!(theta > 0.0) || !(theta <= alpha) || !(alpha <= 1.0)) {
    throw std::runtime_error("thresholds must satisfy 0 < theta <= alpha <= 1");
  }
  if (range.is_bounded && range.hops < 1) {
    throw std::runtime_error("bounded propagation range must be >= 1");
  }
}

namespace {

// ceil(fraction * degree) in integers, shielded against the product landing
// a hair above an exact integer in floating point.
std::uint32_t credit_need(double fraction, vertex_t degree) {
  if (degree == 0) return 1;
  const double raw = fraction * static_cast<double>(degree);
  const auto need = static_cast<std::uint32_t>(std::ceil(raw - 1e-9));
  return need < 1 ? 1 : need;
}

}  // namespace

VertexNeeds thresholds_of(const Graph& g, const ThresholdConfig& cfg, vertex_t v) {
  if (v >= g.n()) throw std::runtime_error("vertex out of range");
  const vertex_t degree = g.degree(v);
  return {credit_need(cfg.theta, degree), credit_need(cfg.alpha, degree)};
}

void validate_seed_list(const Graph& g, const SeedList& seeds) {
  std::vector<std::uint8_t> seen(g.n(), 0);
  for (vertex_t s : seeds) {
    if (s >= g.n()) throw std::runtime_error("seed vertex out of range");
    if (seen[s]) throw std::runtime_error("duplicate seed " + g.label(s));
    seen[s] = 1;
  }
}

void seed_and_propagate(const Graph& g, const ThresholdConfig& cfg, DiffusionState& state,
                        vertex_t u) {
  if (u >= g.n()) throw std::runtime_error("seed vertex out of range");
  if (state.activated[u] && state.depth[u] == 0) return;  // already a seed

  if (!state.influenced[u]) {
    state.influenced[u] = 1;
    ++state.influenced_count;
  }
  if (!state.activated[u]) {
    state.activated[u] = 1;
    ++state.activated_count;
  }
  // A vertex the cascade had activated (and possibly range-closed) re-opens
  // as a depth-0 relayer when seeded explicitly.
  state.depth[u] = 0;
  state.relay_closed[u] = 0;

  std::queue<std::pair<vertex_t, std::uint32_t>> relayers;
  relayers.emplace(u, 0);
  while (!relayers.empty()) {
    const auto [x, d] = relayers.front();
    relayers.pop();
    for (vertex_t w : g.neighbors(x)) {
      if (state.activated[w]) continue;
      ++state.credits[w];
      const VertexNeeds needs = thresholds_of(g, cfg, w);
      if (!state.influenced[w] && state.credits[w] >= needs.influence_need) {
        state.influenced[w] = 1;
        ++state.influenced_count;
      }
      if (state.credits[w] >= needs.activation_need) {
        state.activated[w] = 1;
        ++state.activated_count;
        state.depth[w] = d + 1;  // depth of the crossing contact
        if (cfg.range.allows_relay_at(d + 1)) {
          relayers.emplace(w, d + 1);
        } else {
          state.relay_closed[w] = 1;
        }
      }
    }
  }
}

DiffusionState run_diffusion(const Graph& g, const ThresholdConfig& cfg, const SeedList& seeds) {
  cfg.validate();
  validate_seed_list(g, seeds);
  DiffusionState state(g);
  for (vertex_t s : seeds) seed_and_propagate(g, cfg, state, s);
  return state;
}

bool is_fully_influenced(const Graph& g, const DiffusionState& state) {
  return state.influenced_count == g.n();
}

void dump_state(const Graph& g, const DiffusionState& state, std::ostream& out) {
  out << "vertex,label,influenced,activated,depth,credits\n";
  for (vertex_t v = 0; v < g.n(); ++v) {
    out << v << ',' << g.label(v) << ',' << int(state.influenced[v]) << ','
        << int(state.activated[v]) << ',';
    if (state.depth[v] == kNoDepth) {
      out << '-';
    } else {
      out << state.depth[v];
    }
    out << ',' << state.credits[v] << '\n';
  }
}

}  // namespace minseed
