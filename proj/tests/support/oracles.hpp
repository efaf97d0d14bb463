#pragma once

// Test-side reference implementations. Nothing here calls the library's
// solver, exact module or formulas; they only read a Graph's edge list.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "pebble/graph.hpp"

namespace oracle {

using pebble::Graph;
using pebble::Vertex;
using Counts = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kInf = 1u << 30;

inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Plain reachability over all distributions reachable by moves, with no
/// pruning of any kind. Exponential; only for tiny instances.
inline bool blind_solvable(const Graph& g, const Counts& start, Vertex root, std::uint32_t t = 1, bool greedy = false) {
  const auto dist = floyd_warshall(g);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (auto [a, b] : g.edges()) {
    arcs.emplace_back(a, b);
    arcs.emplace_back(b, a);
  }
  std::set<Counts> seen{start};
  std::vector<Counts> stack{start};
  while (!stack.empty()) {
    Counts c = std::move(stack.back());
    stack.pop_back();
    if (c[root] >= t) return true;
    for (auto [from, to] : arcs) {
      if (c[from] < 2) continue;
      if (greedy && dist[to][root] >= dist[from][root]) continue;
      Counts next = c;
      next[from] -= 2;
      next[to] += 1;
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return false;
}

/// Calls fn on every count vector with `total` pebbles over n vertices.
inline void for_each_counts(std::size_t n, std::uint32_t total, const std::function<void(const Counts&)>& fn) {
  Counts c(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == n) {
      c[i] = left;
      fn(c);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      c[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n == 0) return;
  rec(0, total);
}

/// Blind rooted pebbling number by trying sizes upward.
inline std::uint32_t blind_pebbling_number(const Graph& g, Vertex root, std::uint32_t t = 1) {
  for (std::uint32_t k = 0;; ++k) {
    bool all = true;
    for_each_counts(g.vertex_count(), k, [&](const Counts& c) {
      if (all && !blind_solvable(g, c, root, t)) all = false;
    });
    if (all) return k;
  }
}

/// Every path partition of the tree oriented toward root, as sorted
/// (nonincreasing) length lists. At each non-root vertex at most one child
/// edge continues through the vertex's own parent edge.
inline std::vector<std::vector<std::uint32_t>> all_path_partitions(const Graph& tree, Vertex root) {
  const std::size_t n = tree.vertex_count();
  std::vector<Vertex> parent(n, root);
  std::vector<std::vector<Vertex>> children(n);
  std::vector<Vertex> order{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : tree.neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        children[order[i]].push_back(w);
        order.push_back(w);
      }
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < n; ++v)
    if (v != root && !children[v].empty()) inner.push_back(v);
  // choice[v] = index into children[v] that continues, or size() for none
  std::vector<std::size_t> choice(n, 0);
  std::set<std::vector<std::uint32_t>> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == inner.size()) {
      // every edge (v -> parent) ends a path unless parent continues v
      std::vector<std::uint32_t> len(n, 0);  // length of the path arriving at v's parent edge, including it
      std::vector<std::uint32_t> sizes;
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        if (v == root) continue;
        std::uint32_t carried = 0;
        if (!children[v].empty() && choice[v] < children[v].size()) carried = len[children[v][choice[v]]];
        len[v] = carried + 1;
      }
      for (Vertex v = 0; v < n; ++v) {
        if (v == root) continue;
        const Vertex p = parent[v];
        const bool continued = p != root && choice[p] < children[p].size() && children[p][choice[p]] == v;
        if (!continued) sizes.push_back(len[v]);
      }
      std::sort(sizes.begin(), sizes.end(), std::greater<>());
      out.insert(sizes);
      return;
    }
    const Vertex v = inner[i];
    for (std::size_t c = 0; c <= children[v].size(); ++c) {
      choice[v] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return {out.begin(), out.end()};
}

inline bool majorizes(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::uint64_t sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

/// Random connected simple graph: random spanning tree plus each other edge
/// with probability p.
inline Graph random_connected_graph(std::mt19937_64& rng, std::uint32_t n, double p) {
  std::vector<pebble::Edge> edges;
  std::set<std::pair<Vertex, Vertex>> have;
  for (Vertex v = 1; v < n; ++v) {
    Vertex u = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    edges.emplace_back(u, v);
    have.insert({u, v});
  }
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!have.contains({a, b}) && coin(rng)) edges.emplace_back(a, b);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
  return Graph::from_edges(n, edges, labels);
}

/// Uniform random count vector with `total` pebbles (stars and bars).
inline Counts random_counts(std::mt19937_64& rng, std::size_t n, std::uint32_t total) {
  std::vector<std::uint32_t> bars;
  std::vector<std::uint32_t> slots(total + n - 1);
  for (std::uint32_t i = 0; i < slots.size(); ++i) slots[i] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  bars.assign(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(n - 1));
  std::sort(bars.begin(), bars.end());
  Counts c(n, 0);
  std::uint32_t prev = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t end = i + 1 < n ? bars[i] : static_cast<std::uint32_t>(slots.size());
    c[i] = end - prev - (i > 0 ? 1 : 0);
    prev = end;
  }
  return c;
}

}  // namespace oracle
