#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pebble/error.hpp"

namespace pebble {

namespace detail {

inline std::vector<std::vector<std::uint32_t>> prufer_adjacency(const std::vector<std::uint32_t>& seq, std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  std::vector<std::uint32_t> degree(n, 1);
  for (auto x : seq) ++degree[x];
  for (auto x : seq) {
    std::uint32_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    adj[leaf].push_back(x);
    adj[x].push_back(leaf);
    --degree[leaf];
    --degree[x];
  }
  std::uint32_t a = n, b = n;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    (a == n ? a : b) = v;
  }
  adj[a].push_back(b);
  adj[b].push_back(a);
  return adj;
}

inline std::string rooted_code(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t v, std::uint32_t parent) {
  std::vector<std::string> parts;
  for (auto w : adj[v])
    if (w != parent) parts.push_back(rooted_code(adj, w, v));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (auto& p : parts) out += p;
  return out + ")";
}

inline std::vector<std::uint32_t> tree_centers(const std::vector<std::vector<std::uint32_t>>& adj) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  std::vector<std::uint32_t> degree(n), layer;
  for (std::uint32_t v = 0; v < n; ++v) {
    degree[v] = static_cast<std::uint32_t>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::uint32_t left = n;
  while (left > 2) {
    left -= static_cast<std::uint32_t>(layer.size());
    std::vector<std::uint32_t> next;
    for (auto v : layer)
      for (auto w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

/// BFS relabelling from `root` with children visited in canonical order.
inline std::vector<std::uint32_t> canonical_parents(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t root) {
  const auto n = adj.size();
  std::vector<std::uint32_t> index(n, 0), parent_of(n, root), order{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  std::vector<std::uint32_t> parents;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto v = order[i];
    index[v] = static_cast<std::uint32_t>(i);
    if (i > 0) parents.push_back(index[parent_of[v]]);
    std::vector<std::pair<std::string, std::uint32_t>> kids;
    for (auto w : adj[v])
      if (!seen[w]) kids.emplace_back(rooted_code(adj, w, v), w);
    std::sort(kids.begin(), kids.end());
    for (auto& [code, w] : kids) {
      seen[w] = true;
      parent_of[w] = v;
      order.push_back(w);
    }
  }
  return parents;
}

}  // namespace detail

/// Every unlabelled tree on n vertices exactly once, as parent lists in the
/// graph-spec convention (parents[i] is the parent of vertex i+1, vertex 0 is
/// a centre). Sorted by canonical code, so the order is stable.
inline std::vector<std::vector<std::uint32_t>> trees_on(std::uint32_t n) {
  if (n < 1) throw ParameterError("a tree needs at least one vertex");
  if (n > 10) throw ParameterError("tree catalog is limited to 10 vertices");
  if (n == 1) return {{}};
  if (n == 2) return {{0}};
  std::map<std::string, std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> seq(n - 2, 0);
  while (true) {
    auto adj = detail::prufer_adjacency(seq, n);
    std::string best;
    std::uint32_t best_root = 0;
    for (auto c : detail::tree_centers(adj)) {
      auto code = detail::rooted_code(adj, c, c);
      if (best.empty() || code < best) {
        best = std::move(code);
        best_root = c;
      }
    }
    if (!found.contains(best)) found.emplace(best, detail::canonical_parents(adj, best_root));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [code, parents] : found) out.push_back(std::move(parents));
  return out;
}

/// trees_on(1) through trees_on(max_vertices), concatenated.
inline std::vector<std::vector<std::uint32_t>> tree_catalog(std::uint32_t max_vertices) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t n = 1; n <= max_vertices; ++n)
    for (auto& t : trees_on(n)) out.push_back(std::move(t));
  return out;
}

}  // namespace pebble
