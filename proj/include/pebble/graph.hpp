#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pebble/error.hpp"

namespace pebble {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Layout metadata for J_{n,m}: an nm-cycle plus a hub joined to every n-th
/// cycle vertex. Cycle vertices v_0..v_{nm-1} have indices 0..nm-1 and the hub
/// has index nm.
struct JahangirLayout {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  Vertex hub = 0;
  std::vector<Vertex> cycle_order;
  /// segments[i] = (v_{ni}, ..., v_{n(i+1)}), indices taken mod nm.
  std::vector<std::vector<Vertex>> segments;

  /// v_i with i reduced mod nm.
  Vertex cycle_vertex(std::uint64_t i) const { return cycle_order[i % cycle_order.size()]; }

  /// v_{ni + n/2}; only meaningful for even n.
  Vertex segment_midpoint(std::uint32_t i) const {
    return cycle_vertex(std::uint64_t{n} * i + n / 2);
  }
};

/// How family constructors name vertices: v<first_index>, v<first_index+1>, ...
struct LabelOptions {
  std::uint32_t first_index = 0;
};

/// Undirected simple connected graph. Immutable once built.
class Graph {
public:
  Graph() = default;

  /// Validates symmetry, simplicity and connectivity. Missing labels default
  /// to "v<i>".
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                          std::vector<std::string> labels = {},
                          std::map<std::string, Vertex, std::less<>> aliases = {},
                          std::optional<JahangirLayout> layout = std::nullopt) {
    if (vertex_count == 0) throw ParameterError("graph must have at least one vertex");
    if (vertex_count > std::numeric_limits<Vertex>::max() / 2)
      throw ParameterError("graph too large");
    Graph g;
    g.adjacency_.assign(vertex_count, {});
    for (auto [a, b] : edges) {
      if (a >= vertex_count || b >= vertex_count)
        throw ParameterError("edge endpoint out of range");
      if (a == b) throw ParameterError("self-loop at vertex " + std::to_string(a));
      g.adjacency_[a].push_back(b);
      g.adjacency_[b].push_back(a);
    }
    for (auto& nbrs : g.adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
        throw ParameterError("duplicate edge");
    }
    if (labels.empty()) {
      labels.reserve(vertex_count);
      for (std::size_t v = 0; v < vertex_count; ++v) labels.push_back("v" + std::to_string(v));
    }
    if (labels.size() != vertex_count) throw ParameterError("label count does not match vertex count");
    g.labels_ = std::move(labels);
    for (Vertex v = 0; v < vertex_count; ++v) {
      if (!g.by_label_.emplace(g.labels_[v], v).second)
        throw ParameterError("duplicate vertex label '" + g.labels_[v] + "'");
    }
    for (auto& [name, v] : aliases) {
      if (v >= vertex_count) throw ParameterError("alias target out of range");
      auto [it, fresh] = g.by_label_.emplace(name, v);
      if (!fresh && it->second != v) throw ParameterError("alias '" + name + "' clashes with a label");
    }
    g.aliases_ = std::move(aliases);
    g.layout_ = std::move(layout);
    if (!g.connected()) throw ParameterError("graph is not connected");
    g.fingerprint_ = g.compute_fingerprint();
    return g;
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& nbrs : adjacency_) total += nbrs.size();
    return total / 2;
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool adjacent(Vertex a, Vertex b) const {
    if (a >= vertex_count() || b >= vertex_count()) return false;
    return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex a = 0; a < vertex_count(); ++a)
      for (Vertex b : adjacency_[a])
        if (a < b) out.emplace_back(a, b);
    return out;
  }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::map<std::string, Vertex, std::less<>>& aliases() const noexcept { return aliases_; }

  /// Resolves a label or alias.
  std::optional<Vertex> find(std::string_view name) const {
    if (auto it = by_label_.find(name); it != by_label_.end()) return it->second;
    return std::nullopt;
  }

  Vertex vertex(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw ParameterError("unknown vertex label '" + std::string(name) + "'");
  }

  const std::optional<JahangirLayout>& jahangir() const noexcept { return layout_; }

  /// Stable hash of the vertex count and edge set; labels are not included.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }

private:
  bool connected() const {
    std::vector<bool> seen(vertex_count(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == vertex_count();
  }

  std::uint64_t compute_fingerprint() const {
    // FNV-1a over (n, a, b, ...)
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
      for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xffU;
        h *= 1099511628211ULL;
      }
    };
    mix(vertex_count());
    for (auto [a, b] : edges()) {
      mix(a);
      mix(b);
    }
    return h;
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::map<std::string, Vertex, std::less<>> by_label_;
  std::map<std::string, Vertex, std::less<>> aliases_;
  std::optional<JahangirLayout> layout_;
  std::uint64_t fingerprint_ = 0;
};

namespace detail {

inline std::vector<std::string> numbered_labels(std::size_t count, LabelOptions opts) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    labels.push_back("v" + std::to_string(i + opts.first_index));
  return labels;
}

}  // namespace detail

/// L_length = v_0 v_1 ... v_length.
inline Graph build_path(std::uint32_t length, LabelOptions opts = {}) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < length; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(length + 1, edges, detail::numbered_labels(length + 1, opts));
}

inline Graph build_cycle(std::uint32_t k, LabelOptions opts = {}) {
  if (k < 3) throw ParameterError("cycle length must be at least 3, got " + std::to_string(k));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, edges, detail::numbered_labels(k, opts));
}

/// parents[i] is the parent of vertex i+1; vertex 0 is the root.
inline Graph build_tree(std::span<const std::uint32_t> parents, LabelOptions opts = {}) {
  const std::size_t n = parents.size() + 1;
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (parents[i] >= n) throw ParameterError("parent index out of range at vertex " + std::to_string(i + 1));
    if (parents[i] == i + 1) throw ParameterError("vertex " + std::to_string(i + 1) + " is its own parent");
  }
  // every vertex must reach the root by following parents
  std::vector<int> state(n, 0);  // 0 unknown, 1 in progress, 2 reaches root
  state[0] = 2;
  for (std::size_t start = 1; start < n; ++start) {
    std::vector<std::size_t> chain;
    std::size_t v = start;
    while (state[v] == 0) {
      state[v] = 1;
      chain.push_back(v);
      v = parents[v - 1];
    }
    if (state[v] == 1) throw ParameterError("parent list contains a cycle through vertex " + std::to_string(v));
    for (auto c : chain) state[c] = 2;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parents.size(); ++i) edges.emplace_back(static_cast<Vertex>(i + 1), parents[i]);
  return Graph::from_edges(n, edges, detail::numbered_labels(n, opts));
}

/// J_{n,m}: cycle v_0..v_{nm-1} plus hub u adjacent to every v_{ni}.
inline Graph build_jahangir(std::uint32_t n, std::uint32_t m, LabelOptions opts = {}) {
  if (n < 1) throw ParameterError("jahangir segment length n must be >= 1");
  if (m < 3) throw ParameterError("jahangir segment count m must be >= 3");
  const std::uint64_t cycle_len = std::uint64_t{n} * m;
  if (cycle_len > 1'000'000) throw ParameterError("jahangir graph too large");
  const auto len = static_cast<Vertex>(cycle_len);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
  for (Vertex i = 0; i < m; ++i) edges.emplace_back(len, i * n);

  JahangirLayout layout;
  layout.n = n;
  layout.m = m;
  layout.hub = len;
  for (Vertex i = 0; i < len; ++i) layout.cycle_order.push_back(i);
  for (std::uint32_t i = 0; i < m; ++i) {
    std::vector<Vertex> seg;
    for (std::uint32_t j = 0; j <= n; ++j) seg.push_back(static_cast<Vertex>((i * n + j) % len));
    layout.segments.push_back(std::move(seg));
  }

  auto labels = detail::numbered_labels(len, opts);
  std::map<std::string, Vertex, std::less<>> aliases{{"hub", len}};
  if (opts.first_index == 0) {
    labels.push_back("u");
  } else {
    labels.push_back("v" + std::to_string(len + opts.first_index));
    aliases.emplace("u", len);
  }
  return Graph::from_edges(len + 1, edges, std::move(labels), std::move(aliases), std::move(layout));
}

/// Adds `count` vertices, each adjacent to exactly the open neighbourhood of v.
/// New vertices are labelled "<label(v)>#<j>".
inline Graph clone_vertex(const Graph& g, Vertex v, std::uint32_t count) {
  if (v >= g.vertex_count()) throw ParameterError("clone source vertex out of range");
  if (count < 1) throw ParameterError("clone count must be >= 1");
  if (g.degree(v) == 0) throw ParameterError("cannot clone an isolated vertex");
  auto edges = g.edges();
  auto labels = g.labels();
  auto aliases = g.aliases();
  const auto base = static_cast<Vertex>(g.vertex_count());
  std::uint32_t suffix = 1;
  for (std::uint32_t c = 0; c < count; ++c) {
    const Vertex fresh = base + c;
    for (Vertex w : g.neighbors(v)) edges.emplace_back(fresh, w);
    std::string name;
    do {
      name = g.label(v) + "#" + std::to_string(suffix++);
    } while (std::find(labels.begin(), labels.end(), name) != labels.end() || aliases.contains(name));
    labels.push_back(std::move(name));
  }
  return Graph::from_edges(base + count, edges, std::move(labels), std::move(aliases));
}

/// Unweighted BFS distances from src.
inline std::vector<std::uint32_t> distances_from(const Graph& g, Vertex src) {
  if (src >= g.vertex_count()) throw ParameterError("source vertex out of range");
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// 2-colouring, or nullopt if the graph has an odd cycle.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  auto dist = distances_from(g, 0);
  for (auto [a, b] : g.edges())
    if (dist[a] % 2 == dist[b] % 2) return std::nullopt;
  std::vector<int> side(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) side[v] = static_cast<int>(dist[v] % 2);
  return side;
}

}  // namespace pebble
