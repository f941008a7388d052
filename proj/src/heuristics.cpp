#include "minseed/heuristics.hpp"

#include <algorithm>
#include <stdexcept>

namespace minseed {

std::vector<std::uint32_t> inactive_degrees(const Graph& g, const DiffusionState& state) {
  std::vector<std::uint32_t> degrees(g.n(), 0);
  for (vertex_t v = 0; v < g.n(); ++v) {
    if (state.activated[v]) continue;
    std::uint32_t count = 0;
    for (vertex_t w : g.neighbors(v)) {
      if (!state.activated[w]) ++count;
    }
    degrees[v] = count;
  }
  return degrees;
}

CandidateList most_inactive_candidates(const Graph& g, const DiffusionState& state) {
  CandidateList inactive;
  for (vertex_t v = 0; v < g.n(); ++v) {
    if (!state.activated[v]) inactive.push_back(v);
  }
  if (inactive.empty()) throw std::runtime_error("no inactive vertices");

  const auto degrees = inactive_degrees(g, state);
  std::uint64_t degree_sum = 0;
  for (vertex_t v : inactive) degree_sum += degrees[v];
  const std::uint64_t count = inactive.size();
  // ceil(average inactive degree), clamped so a batch always makes progress.
  std::uint64_t batch = (degree_sum + count - 1) / count;
  if (batch < 1) batch = 1;

  auto by_degree_then_id = [&degrees](vertex_t a, vertex_t b) {
    if (degrees[a] != degrees[b]) return degrees[a] > degrees[b];
    return a < b;
  };
  if (batch < inactive.size()) {
    std::partial_sort(inactive.begin(), inactive.begin() + static_cast<std::ptrdiff_t>(batch),
                      inactive.end(), by_degree_then_id);
    inactive.resize(batch);
  } else {
    std::sort(inactive.begin(), inactive.end(), by_degree_then_id);
  }
  return inactive;
}

SeedList adh_construct(const Graph& g, const ThresholdConfig& cfg) {
  cfg.validate();
  if (g.n() == 0) throw std::runtime_error("empty graph");
  DiffusionState state(g);
  SeedList seeds;
  while (!is_fully_influenced(g, state)) {
    for (vertex_t u : most_inactive_candidates(g, state)) {
      if (state.activated[u]) continue;  // a batch mate got there first
      seeds.push_back(u);
      seed_and_propagate(g, cfg, state, u);
      if (is_fully_influenced(g, state)) break;
    }
  }
  return seeds;
}

SeedList cfh_construct(const Graph& g, const ThresholdConfig& cfg) {
  cfg.validate();
  if (g.n() == 0) throw std::runtime_error("empty graph");
  DiffusionState state(g);
  SeedList seeds;
  while (!is_fully_influenced(g, state)) {
    const auto degrees = inactive_degrees(g, state);
    vertex_t pick = kNoVertex;
    if (!seeds.empty()) {
      // Current seeds are all activated, so filtering to inactive vertices
      // also keeps the pool disjoint from the seed list itself.
      for (vertex_t v : khop_neighborhood(g, seeds, 2)) {
        if (state.activated[v]) continue;
        if (pick == kNoVertex || degrees[v] > degrees[pick]) pick = v;
      }
    }
    if (pick == kNoVertex) {
      for (vertex_t v = 0; v < g.n(); ++v) {
        if (state.activated[v]) continue;
        if (pick == kNoVertex || degrees[v] > degrees[pick]) pick = v;
      }
    }
    seeds.push_back(pick);
    seed_and_propagate(g, cfg, state, pick);
  }
  return seeds;
}

BfsTreeScore score_bfs_trees(const Graph& g, const DiffusionState& state,
                             const CandidateList& roots, BfsTreeWeighting weighting) {
  if (roots.empty()) throw std::runtime_error("empty candidate list");
  BfsTreeScore score;
  score.root_of.assign(g.n(), kNoVertex);
  score.weight.assign(g.n(), 0);
  const auto degrees = inactive_degrees(g, state);

  std::vector<vertex_t> queue;
  queue.reserve(roots.size());
  for (vertex_t r : roots) {
    if (r >= g.n() || state.activated[r]) {
      throw std::runtime_error("candidate root is not an inactive vertex");
    }
    if (score.root_of[r] != kNoVertex) continue;
    score.root_of[r] = r;
    score.weight[r] = degrees[r];
    queue.push_back(r);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const vertex_t u = queue[head];
    for (vertex_t v : g.neighbors(u)) {
      if (state.activated[v] || score.root_of[v] != kNoVertex) continue;
      score.root_of[v] = score.root_of[u];
      score.weight[v] = weighting == BfsTreeWeighting::path_accumulated
                            ? degrees[v] + score.weight[u]
                            : score.weight[u];
      queue.push_back(v);
    }
  }

  for (vertex_t v : queue) {
    const bool better =
        score.best_vertex == kNoVertex || score.weight[v] > score.best_weight ||
        (score.weight[v] == score.best_weight &&
         (v < score.best_vertex ||
          (v == score.best_vertex && score.root_of[v] < score.best_root)));
    if (better) {
      score.best_vertex = v;
      score.best_root = score.root_of[v];
      score.best_weight = score.weight[v];
    }
  }
  return score;
}

vertex_t heaviest_bfs_root(const Graph& g, const DiffusionState& state, const CandidateList& roots,
                           BfsTreeWeighting weighting) {
  return score_bfs_trees(g, state, roots, weighting).best_root;
}

SeedList bbh_construct(const Graph& g, const ThresholdConfig& cfg, BfsTreeWeighting weighting) {
  cfg.validate();
  if (g.n() == 0) throw std::runtime_error("empty graph");
  DiffusionState state(g);
  SeedList seeds;
  while (!is_fully_influenced(g, state)) {
    const CandidateList candidates = most_inactive_candidates(g, state);
    const vertex_t u = heaviest_bfs_root(g, state, candidates, weighting);
    seeds.push_back(u);
    seed_and_propagate(g, cfg, state, u);
  }
  return seeds;
}

namespace {

// Greedy expansion order: highest-degree neighbors first, ids break ties.
std::vector<vertex_t> expansion_order(const Graph& g, vertex_t v) {
  std::vector<vertex_t> order(g.neighbors(v).begin(), g.neighbors(v).end());
  std::sort(order.begin(), order.end(), [&g](vertex_t a, vertex_t b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  return order;
}

}  // namespace

SeedList traversal_greedy_construct(const Graph& g, const ThresholdConfig& cfg,
                                    TraversalMode mode) {
  cfg.validate();
  if (g.n() == 0) throw std::runtime_error("empty graph");

  auto components = connected_components(g);
  auto root_of = [&g](const std::vector<vertex_t>& component) {
    vertex_t best = component.front();
    for (vertex_t v : component) {
      if (g.degree(v) > g.degree(best) || (g.degree(v) == g.degree(best) && v < best)) best = v;
    }
    return best;
  };
  std::sort(components.begin(), components.end(),
            [&](const std::vector<vertex_t>& a, const std::vector<vertex_t>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return root_of(a) < root_of(b);
            });

  DiffusionState state(g);
  SeedList seeds;
  auto visit = [&](vertex_t v) {
    if (!state.influenced[v]) {
      seeds.push_back(v);
      seed_and_propagate(g, cfg, state, v);
    }
    return is_fully_influenced(g, state);
  };

  std::vector<std::uint8_t> discovered(g.n(), 0);
  for (const auto& component : components) {
    const vertex_t root = root_of(component);
    discovered[root] = 1;
    if (mode == TraversalMode::breadth_first) {
      std::vector<vertex_t> queue{root};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        if (visit(queue[head])) return seeds;
        for (vertex_t w : expansion_order(g, queue[head])) {
          if (!discovered[w]) {
            discovered[w] = 1;
            queue.push_back(w);
          }
        }
      }
    } else {
      // Preorder walk equivalent to the recursive form, via explicit frames.
      struct Frame {
        std::vector<vertex_t> order;
        std::size_t next = 0;
      };
      if (visit(root)) return seeds;
      std::vector<Frame> stack;
      stack.push_back({expansion_order(g, root), 0});
      while (!stack.empty()) {
        Frame& frame = stack.back();
        if (frame.next >= frame.order.size()) {
          stack.pop_back();
          continue;
        }
        const vertex_t w = frame.order[frame.next++];
        if (discovered[w]) continue;
        discovered[w] = 1;
        if (visit(w)) return seeds;
        stack.push_back({expansion_order(g, w), 0});
      }
    }
  }
  return seeds;
}

const std::vector<std::string>& heuristic_ids() {
  static const std::vector<std::string> ids = {"dfs-greedy", "bfs-greedy", "adh", "cfh", "bbh"};
  return ids;
}

SeedList construct_by_id(const Graph& g, const ThresholdConfig& cfg, const std::string& id) {
  if (id == "dfs-greedy") return traversal_greedy_construct(g, cfg, TraversalMode::depth_first);
  if (id == "bfs-greedy") return traversal_greedy_construct(g, cfg, TraversalMode::breadth_first);
  if (id == "adh") return adh_construct(g, cfg);
  if (id == "cfh") return cfh_construct(g, cfg);
  if (id == "bbh") return bbh_construct(g, cfg);
  throw std::runtime_error("unknown heuristic id: " + id);
}

}  // namespace minseed
