#include "minseed/graph.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace minseed {

namespace {

constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);

bool parses_as_integer(const std::string& s, long long& out) {
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  long long value = std::strtoll(begin, &end, 10);
  if (errno != 0 || end != begin + s.size()) return false;
  out = value;
  return true;
}

// Splits one line into tokens; returns false for blank/comment lines and
// throws on anything that is not exactly two tokens joined by whitespace or
// a single comma.
bool split_edge_line(const std::string& line, std::uint64_t lineno, std::string& a,
                     std::string& b) {
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
  if (i == line.size()) return false;
  if (line[i] == '#' || line[i] == '%') return false;

  std::vector<std::string> tokens;
  int commas = 0;
  std::string current;
  for (; i < line.size(); ++i) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
      if (c == ',') ++commas;
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));

  if (tokens.size() != 2 || commas > 1) {
    throw std::runtime_error("line " + std::to_string(lineno) + ": expected 2 tokens, got " +
                             std::to_string(tokens.size()));
  }
  a = std::move(tokens[0]);
  b = std::move(tokens[1]);
  return true;
}

std::string read_gzip_file(const std::string& path) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) throw std::runtime_error("cannot open " + path);
  std::string content;
  char buffer[1 << 16];
  int got = 0;
  while ((got = gzread(file, buffer, sizeof(buffer))) > 0) {
    content.append(buffer, static_cast<std::size_t>(got));
  }
  bool failed = got < 0;
  gzclose(file);
  if (failed) throw std::runtime_error("gzip read error in " + path);
  return content;
}

}  // namespace

Graph Graph::from_edge_pairs(const std::vector<std::pair<std::string, std::string>>& edges,
                             const std::vector<std::string>& isolated_labels,
                             LoadSummary* summary) {
  LoadSummary local;
  LoadSummary& sum = summary != nullptr ? *summary : local;

  std::map<std::string, vertex_t> ids;  // placeholder ids, re-assigned after sorting
  std::vector<std::string> labels;
  auto intern = [&](const std::string& label) -> vertex_t {
    auto [it, inserted] = ids.emplace(label, static_cast<vertex_t>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::vector<std::pair<vertex_t, vertex_t>> pairs;
  pairs.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    ++sum.edge_lines;
    vertex_t u = intern(a);
    vertex_t v = intern(b);
    if (u == v) {
      ++sum.self_loops_dropped;
      continue;
    }
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (const auto& label : isolated_labels) intern(label);

  if (labels.empty()) throw std::runtime_error("no edges");

  // Dense ids follow sorted label order; numeric when every label is an
  // integer so "10" lands after "9".
  bool all_numeric = true;
  std::vector<long long> numeric(labels.size(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!parses_as_integer(labels[i], numeric[i])) {
      all_numeric = false;
      break;
    }
  }
  std::vector<vertex_t> order(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<vertex_t>(i);
  std::sort(order.begin(), order.end(), [&](vertex_t x, vertex_t y) {
    if (all_numeric && numeric[x] != numeric[y]) return numeric[x] < numeric[y];
    return labels[x] < labels[y];
  });
  std::vector<vertex_t> rank(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<vertex_t>(i);

  for (auto& [u, v] : pairs) {
    u = rank[u];
    v = rank[v];
    if (u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  auto last = std::unique(pairs.begin(), pairs.end());
  sum.duplicates_dropped += static_cast<std::uint64_t>(pairs.end() - last);
  pairs.erase(last, pairs.end());

  Graph g;
  g.labels_.resize(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) g.labels_[i] = std::move(labels[order[i]]);
  g.edge_count_ = pairs.size();

  std::vector<std::uint64_t> deg(g.labels_.size(), 0);
  for (const auto& [u, v] : pairs) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(g.labels_.size() + 1, 0);
  for (std::size_t v = 0; v < deg.size(); ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.neighbors_.resize(2 * pairs.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : pairs) {
    g.neighbors_[cursor[u]++] = v;
    g.neighbors_[cursor[v]++] = u;
  }
  for (vertex_t v = 0; v < g.n(); ++v) {
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

Graph Graph::load_stream(std::istream& in, LoadSummary* summary) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::string line, a, b;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (split_edge_line(line, lineno, a, b)) edges.emplace_back(a, b);
  }
  return from_edge_pairs(edges, {}, summary);
}

Graph Graph::load(const std::string& path, LoadSummary* summary) {
  if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
    std::istringstream in(read_gzip_file(path));
    return load_stream(in, summary);
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_stream(in, summary);
}

void Graph::write_edges(std::ostream& out) const {
  for (vertex_t u = 0; u < n(); ++u) {
    for (vertex_t v : neighbors(u)) {
      if (v > u) out << labels_[u] << ' ' << labels_[v] << '\n';
    }
  }
}

NetworkStats compute_stats(const Graph& g) {
  if (g.n() == 0) throw std::runtime_error("stats of empty graph");
  const vertex_t n = g.n();

  // Per-vertex triangle counts: for every edge (u,v) each common neighbor w
  // closes one triangle, credited to w. Each triangle is seen once per edge,
  // crediting each corner exactly once.
  std::vector<std::uint64_t> triangles(n, 0);
  for (vertex_t u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    for (vertex_t v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) {
          ++i;
        } else if (nu[i] > nv[j]) {
          ++j;
        } else {
          ++triangles[nu[i]];
          ++i;
          ++j;
        }
      }
    }
  }

  NetworkStats stats;
  stats.nodes = n;
  stats.edges = g.m();
  stats.avg_degree = n > 0 ? 2.0 * static_cast<double>(g.m()) / n : 0.0;
  stats.density =
      n >= 2 ? 2.0 * static_cast<double>(g.m()) / (static_cast<double>(n) * (n - 1)) : 0.0;
  double tri_sum = 0.0;
  double cc_sum = 0.0;
  for (vertex_t v = 0; v < n; ++v) {
    tri_sum += static_cast<double>(triangles[v]);
    const double d = g.degree(v);
    if (d >= 2.0) cc_sum += 2.0 * static_cast<double>(triangles[v]) / (d * (d - 1.0));
  }
  stats.avg_triangles = tri_sum / n;
  stats.avg_cc = cc_sum / n;
  return stats;
}

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

std::vector<std::vector<vertex_t>> connected_components(const Graph& g) {
  std::vector<std::vector<vertex_t>> components;
  std::vector<std::uint8_t> seen(g.n(), 0);
  std::vector<vertex_t> queue;
  for (vertex_t start = 0; start < g.n(); ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (vertex_t w : g.neighbors(queue[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    components.push_back(queue);
  }
  return components;
}

std::uint32_t diameter(const Graph& g) {
  if (g.n() == 0) throw std::runtime_error("diameter of empty graph");
  auto components = connected_components(g);
  const auto& largest =
      *std::max_element(components.begin(), components.end(),
                        [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::uint32_t best = 0;
  std::vector<std::uint32_t> dist(g.n());
  std::vector<vertex_t> queue;
  queue.reserve(largest.size());
  for (vertex_t source : largest) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[source] = 0;
    queue.assign(1, source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      vertex_t u = queue[head];
      for (vertex_t w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          best = std::max(best, dist[w]);
          queue.push_back(w);
        }
      }
    }
  }
  return best;
}

std::vector<vertex_t> khop_neighborhood(const Graph& g, const std::vector<vertex_t>& sources,
                                        std::uint32_t k) {
  std::vector<std::uint32_t> dist(g.n(), kUnreached);
  std::vector<vertex_t> queue;
  for (vertex_t s : sources) {
    if (s >= g.n()) throw std::runtime_error("unknown vertex id " + std::to_string(s));
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    vertex_t u = queue[head];
    if (dist[u] == k) continue;
    for (vertex_t w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<vertex_t> result;
  result.reserve(queue.size());
  for (vertex_t v = 0; v < g.n(); ++v) {
    if (dist[v] != kUnreached) result.push_back(v);
  }
  return result;
}

}  // namespace minseed
