#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace minseed {

using vertex_t = std::uint32_t;
inline constexpr vertex_t kNoVertex = static_cast<vertex_t>(-1);

// Counters for input rows that were accepted but normalized away.
struct LoadSummary {
  std::uint64_t edge_lines = 0;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
};

// Immutable simple undirected graph in CSR form. Dense ids 0..n-1 are
// assigned by sorted label order: numeric order when every label parses as
// an integer, lexicographic otherwise, so tie-breaking downstream is
// reproducible across runs and platforms.
class Graph {
public:
  static Graph from_edge_pairs(const std::vector<std::pair<std::string, std::string>>& edges,
                               const std::vector<std::string>& isolated_labels = {},
                               LoadSummary* summary = nullptr);
  // Accepts '#'/'%' comment lines; tokens separated by runs of spaces/tabs or
  // a single comma. Files ending in .gz are decompressed transparently.
  static Graph load(const std::string& path, LoadSummary* summary = nullptr);
  static Graph load_stream(std::istream& in, LoadSummary* summary = nullptr);

  vertex_t n() const { return static_cast<vertex_t>(offsets_.size() - 1); }
  std::uint64_t m() const { return edge_count_; }
  std::span<const vertex_t> neighbors(vertex_t v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  vertex_t degree(vertex_t v) const {
    return static_cast<vertex_t>(offsets_[v + 1] - offsets_[v]);
  }
  const std::string& label(vertex_t v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Canonical form: one "u v" line per edge, original labels, edges ordered
  // by dense id pair. Reloading the output reproduces the graph exactly.
  void write_edges(std::ostream& out) const;

  bool operator==(const Graph& other) const = default;

private:
  Graph() = default;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<vertex_t> neighbors_;
  std::vector<std::string> labels_;
  std::uint64_t edge_count_ = 0;
};

struct NetworkStats {
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
  double density = 0.0;        // 2m / n(n-1), 0 for n < 2
  double avg_triangles = 0.0;  // mean per-vertex triangle participation
  double avg_degree = 0.0;     // 2m / n
  double avg_cc = 0.0;         // mean local clustering coefficient
};

NetworkStats compute_stats(const Graph& g);

// Display precision: density/avg_triangles 4 decimals, avg_degree/avg_cc 3.
double round_to(double value, int decimals);

// Maximum BFS eccentricity over the largest connected component.
std::uint32_t diameter(const Graph& g);

// Components in discovery order (seeded by ascending vertex id); members in
// BFS order from the seed.
std::vector<std::vector<vertex_t>> connected_components(const Graph& g);

// All vertices within k hops of any source (sources included), ascending id.
std::vector<vertex_t> khop_neighborhood(const Graph& g, const std::vector<vertex_t>& sources,
                                        std::uint32_t k);

}  // namespace minseed
