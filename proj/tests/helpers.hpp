#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "minseed/diffusion.hpp"
#include "minseed/graph.hpp"

namespace testutil {

// Graph over dense ids 0..n-1 (labels are the decimal ids, so dense id ==
// numeric label); vertices not mentioned by any edge stay isolated.
inline minseed::Graph make_graph(unsigned n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<std::string, std::string>> labeled;
  labeled.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    labeled.emplace_back(std::to_string(u), std::to_string(v));
  }
  std::vector<std::string> all;
  all.reserve(n);
  for (unsigned v = 0; v < n; ++v) all.push_back(std::to_string(v));
  return minseed::Graph::from_edge_pairs(labeled, all);
}

// 14-vertex walkthrough graph used across the heuristic and pruning tests.
inline minseed::Graph demo14() {
  return make_graph(14, {{0, 2},
                         {0, 4},
                         {1, 2},
                         {1, 5},
                         {1, 3},
                         {1, 7},
                         {2, 3},
                         {2, 5},
                         {2, 7},
                         {2, 4},
                         {3, 7},
                         {3, 9},
                         {3, 10},
                         {3, 6},
                         {4, 5},
                         {5, 10},
                         {5, 9},
                         {5, 8},
                         {9, 13},
                         {9, 11},
                         {9, 12}});
}

// Same graph with vertex 5 thinned out (edges 1-5 and 2-5 removed), which
// moves the highest degree to vertex 3.
inline minseed::Graph demo14_sparse() {
  return make_graph(14, {{0, 2},
                         {0, 4},
                         {1, 2},
                         {1, 3},
                         {1, 7},
                         {2, 3},
                         {2, 7},
                         {2, 4},
                         {3, 7},
                         {3, 9},
                         {3, 10},
                         {3, 6},
                         {4, 5},
                         {5, 10},
                         {5, 9},
                         {5, 8},
                         {9, 13},
                         {9, 11},
                         {9, 12}});
}

inline minseed::Graph karate() { return minseed::Graph::load("data/karate.edges"); }

inline minseed::Graph complete_graph(unsigned n) {
  std::vector<std::pair<int, int>> edges;
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned v = u + 1; v < n; ++v) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return make_graph(n, edges);
}

inline minseed::Graph path_graph(unsigned n) {
  std::vector<std::pair<int, int>> edges;
  for (unsigned v = 0; v + 1 < n; ++v) edges.emplace_back(static_cast<int>(v), static_cast<int>(v + 1));
  return make_graph(n, edges);
}

// Hub 0 with n-1 leaves.
inline minseed::Graph star_graph(unsigned n) {
  std::vector<std::pair<int, int>> edges;
  for (unsigned v = 1; v < n; ++v) edges.emplace_back(0, static_cast<int>(v));
  return make_graph(n, edges);
}

// Erdos-Renyi style instance; isolated vertices are kept.
inline minseed::Graph random_graph(std::mt19937& rng, unsigned n, double edge_probability) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned v = u + 1; v < n; ++v) {
      if (coin(rng) < edge_probability) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return make_graph(n, edges);
}

// Brute-force per-vertex triangle membership, O(n^3); statistics oracle.
inline std::vector<std::uint64_t> naive_triangles(const minseed::Graph& g) {
  const auto adjacent = [&g](minseed::vertex_t a, minseed::vertex_t b) {
    const auto nbrs = g.neighbors(a);
    return std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end();
  };
  std::vector<std::uint64_t> counts(g.n(), 0);
  for (minseed::vertex_t u = 0; u < g.n(); ++u) {
    for (minseed::vertex_t v = u + 1; v < g.n(); ++v) {
      if (!adjacent(u, v)) continue;
      for (minseed::vertex_t w = v + 1; w < g.n(); ++w) {
        if (adjacent(u, w) && adjacent(v, w)) {
          ++counts[u];
          ++counts[v];
          ++counts[w];
        }
      }
    }
  }
  return counts;
}

// All-pairs shortest paths; independent check for the BFS-based diameter.
inline std::uint32_t floyd_diameter(const minseed::Graph& g) {
  const unsigned n = g.n();
  constexpr std::uint32_t inf = static_cast<std::uint32_t>(-1) / 2;
  std::vector<std::vector<std::uint32_t>> dist(n, std::vector<std::uint32_t>(n, inf));
  for (unsigned v = 0; v < n; ++v) dist[v][v] = 0;
  for (unsigned v = 0; v < n; ++v) {
    for (minseed::vertex_t w : g.neighbors(static_cast<minseed::vertex_t>(v))) dist[v][w] = 1;
  }
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  // Largest component = the one containing the most reachable pairs' vertices.
  std::vector<unsigned> reach(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (dist[i][j] < inf) ++reach[i];
    }
  }
  unsigned best_size = 0;
  for (unsigned i = 0; i < n; ++i) best_size = std::max(best_size, reach[i]);
  std::uint32_t result = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (reach[i] != best_size) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (dist[i][j] < inf) result = std::max(result, dist[i][j]);
    }
  }
  return result;
}

// Seed labels of a seed list, convenient for order-sensitive assertions.
inline std::vector<std::string> labels_of(const minseed::Graph& g, const minseed::SeedList& seeds) {
  std::vector<std::string> out;
  out.reserve(seeds.size());
  for (minseed::vertex_t v : seeds) out.push_back(g.label(v));
  return out;
}

// Dense ids for a list of integer labels (graphs built via make_graph keep
// them equal, loaded graphs may not).
inline minseed::SeedList by_labels(const minseed::Graph& g, const std::vector<std::string>& labels) {
  minseed::SeedList out;
  for (const auto& wanted : labels) {
    for (minseed::vertex_t v = 0; v < g.n(); ++v) {
      if (g.label(v) == wanted) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

}  // namespace testutil
