#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pebble/graph.hpp"
#include "pebble/solver.hpp"

namespace pebble {

/// Directed multigraph induced by a move sequence: one arc per move.
class MoveDigraph {
public:
  MoveDigraph() = default;

  MoveDigraph(std::size_t vertex_count, std::span<const Move> moves)
      : in_(vertex_count, 0), out_(vertex_count, 0) {
    for (const Move& mv : moves) {
      if (mv.from >= vertex_count || mv.to >= vertex_count) throw ParameterError("move endpoint out of range");
      ++arcs_[{mv.from, mv.to}];
      ++out_[mv.from];
      ++in_[mv.to];
      ++edge_count_;
    }
  }

  static MoveDigraph of(const Graph& g, const Witness& w) { return MoveDigraph(g.vertex_count(), w.moves); }

  std::size_t vertex_count() const noexcept { return in_.size(); }
  std::uint64_t edge_count() const noexcept { return edge_count_; }
  std::uint64_t in_degree(Vertex v) const { return in_.at(v); }
  std::uint64_t out_degree(Vertex v) const { return out_.at(v); }

  /// Arc multiplicities keyed by (from, to).
  const std::map<Edge, std::uint64_t>& arcs() const noexcept { return arcs_; }

  std::uint64_t multiplicity(Vertex from, Vertex to) const {
    auto it = arcs_.find({from, to});
    return it == arcs_.end() ? 0 : it->second;
  }

  /// A directed cycle (vertex sequence, first vertex not repeated), if any.
  std::optional<std::vector<Vertex>> find_cycle() const {
    const std::size_t n = vertex_count();
    std::vector<std::vector<Vertex>> succ(n);
    for (const auto& [arc, mult] : arcs_)
      if (mult > 0) succ[arc.first].push_back(arc.second);
    std::vector<int> colour(n, 0);
    std::vector<Vertex> parent(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (colour[s] != 0) continue;
      std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
      colour[s] = 1;
      while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i == succ[v].size()) {
          colour[v] = 2;
          stack.pop_back();
          continue;
        }
        Vertex w = succ[v][i++];
        if (colour[w] == 1) {
          std::vector<Vertex> cycle{w};
          for (Vertex x = v; x != w; x = parent[x]) cycle.push_back(x);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;
        }
        if (colour[w] == 0) {
          colour[w] = 1;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      }
    }
    return std::nullopt;
  }

  bool acyclic() const { return !find_cycle().has_value(); }

  /// True if no edge carries moves in both directions.
  bool single_direction_per_edge() const {
    for (const auto& [arc, mult] : arcs_)
      if (mult > 0 && multiplicity(arc.second, arc.first) > 0) return false;
    return true;
  }

private:
  std::vector<std::uint64_t> in_;
  std::vector<std::uint64_t> out_;
  std::map<Edge, std::uint64_t> arcs_;
  std::uint64_t edge_count_ = 0;
};

struct SourcesAndSinks {
  std::vector<Vertex> sources;  // out > 0, in = 0
  std::vector<Vertex> sinks;    // in > 0, out = 0
};

inline SourcesAndSinks sinks_and_sources(const MoveDigraph& md) {
  SourcesAndSinks out;
  for (Vertex v = 0; v < md.vertex_count(); ++v) {
    if (md.out_degree(v) > 0 && md.in_degree(v) == 0) out.sources.push_back(v);
    if (md.in_degree(v) > 0 && md.out_degree(v) == 0) out.sinks.push_back(v);
  }
  return out;
}

namespace detail {

/// Orders an acyclic arc multiset so each vertex fires all its moves after
/// every move into it. Ties go to the smallest vertex index.
inline std::vector<Move> topological_moves(std::size_t n, const std::map<Edge, std::uint64_t>& arcs) {
  std::vector<std::uint64_t> indeg(n, 0);
  std::vector<std::vector<std::pair<Vertex, std::uint64_t>>> succ(n);
  for (const auto& [arc, mult] : arcs) {
    if (mult == 0) continue;
    succ[arc.first].emplace_back(arc.second, mult);
    ++indeg[arc.second];
  }
  std::set<Vertex> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  std::vector<Move> order;
  while (!ready.empty()) {
    Vertex v = *ready.begin();
    ready.erase(ready.begin());
    for (auto [w, mult] : succ[v]) {
      for (std::uint64_t i = 0; i < mult; ++i) order.push_back(Move{v, w});
      if (--indeg[w] == 0) ready.insert(w);
    }
  }
  return order;
}

}  // namespace detail

/// Cancels directed cycles in the move digraph (opposing pairs first, then
/// longer cycles) and replays the surviving moves in topological order.
///
/// The result's digraph is acyclic with at most one direction per edge, its
/// cost is no larger, and its end distribution contains the original end.
/// A witness that is already acyclic is returned unchanged.
inline Witness normalize_witness(const Graph& g, const Witness& w) {
  require_same_graph(g, w.start);
  const Distribution end = replay(g, w.start, w.moves);
  if (end != w.end) throw MoveError("witness end distribution does not match its moves");
  MoveDigraph md = MoveDigraph::of(g, w);
  if (md.acyclic()) return w;

  auto arcs = md.arcs();
  for (auto& [arc, mult] : arcs) {
    if (arc.first > arc.second) continue;
    auto back = arcs.find({arc.second, arc.first});
    if (back == arcs.end()) continue;
    const std::uint64_t k = std::min(mult, back->second);
    mult -= k;
    back->second -= k;
  }
  while (true) {
    std::vector<Move> flat;
    for (const auto& [arc, mult] : arcs)
      if (mult > 0) flat.push_back(Move{arc.first, arc.second});
    auto cycle = MoveDigraph(g.vertex_count(), flat).find_cycle();
    if (!cycle) break;
    std::uint64_t k = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      Vertex a = (*cycle)[i], b = (*cycle)[(i + 1) % cycle->size()];
      k = std::min(k, arcs[{a, b}]);
    }
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      Vertex a = (*cycle)[i], b = (*cycle)[(i + 1) % cycle->size()];
      arcs[{a, b}] -= k;
    }
  }
  std::vector<Move> moves = detail::topological_moves(g.vertex_count(), arcs);
  Witness out = make_witness(g, w.start, std::move(moves));
  if (!contains(out.end, w.end)) throw std::logic_error("normalization lost pebbles");
  return out;
}

/// Drops moves whose pebbles come to rest away from `root`: while some
/// vertex other than the root is a sink of the move digraph, one move into
/// it is removed. The witness is normalized first; the result has the root as its
/// only sink (or no moves at all) and delivers at least as many pebbles to
/// the root.
inline Witness prune_to_root(const Graph& g, const Witness& w, Vertex root) {
  Witness acyclic = normalize_witness(g, w);
  auto arcs = MoveDigraph::of(g, acyclic).arcs();
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> in(n, 0), out(n, 0);
  for (const auto& [arc, mult] : arcs) {
    out[arc.first] += mult;
    in[arc.second] += mult;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [arc, mult] : arcs) {
      const Vertex to = arc.second;
      if (mult == 0 || to == root || out[to] != 0) continue;
      --mult;
      --out[arc.first];
      --in[to];
      changed = true;
    }
  }
  return make_witness(g, acyclic.start, detail::topological_moves(n, arcs));
}

}  // namespace pebble
