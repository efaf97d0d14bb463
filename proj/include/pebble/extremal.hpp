#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pebble/distribution.hpp"
#include "pebble/exact.hpp"
#include "pebble/family_spec.hpp"
#include "pebble/formulas.hpp"
#include "pebble/graph.hpp"
#include "pebble/solver.hpp"

namespace pebble {

struct VerificationQuery {
  Vertex root = 0;
  Count t = 1;
  MovePolicy policy = MovePolicy::unrestricted;
  Outcome expected = Outcome::unsolvable;
};

/// A constructed distribution together with the solver queries it must
/// pass or fail.
struct ExtremalCase {
  std::string name;
  std::string graph_spec;
  Graph graph;
  Distribution distribution;
  std::vector<VerificationQuery> queries;
  /// How the distribution was built.
  std::string note;
};

struct QueryCheck {
  VerificationQuery query;
  SolveResult result;
  bool passed() const noexcept { return result.outcome == query.expected; }
};

inline std::vector<QueryCheck> verify_case(const ExtremalCase& c, const SolverOptions& opts = {}) {
  std::vector<QueryCheck> out;
  for (const auto& q : c.queries)
    out.push_back(QueryCheck{q, is_solvable(c.graph, c.distribution, SolveQuery{q.root, q.t, q.policy}, opts)});
  return out;
}

inline bool all_passed(const std::vector<QueryCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

/// Which end of L_n an M profile reaches.
enum class PathEnd { first, last };

/// Reachability constraints that pin a distribution on L_n to a profile.
inline MaxUnsolvableQuery segment_profile_query(std::uint32_t n, SegmentClass profile, PathEnd toward = PathEnd::first) {
  const Vertex a = 0, b = n;
  MaxUnsolvableQuery q;
  switch (profile) {
    case SegmentClass::S: q.unreachable = {{a, 1}, {b, 1}}; break;
    case SegmentClass::M:
      if (toward == PathEnd::first) {
        q.unreachable = {{a, 2}, {b, 1}};
        q.reachable = {{a, 1}};
      } else {
        q.unreachable = {{a, 1}, {b, 2}};
        q.reachable = {{b, 1}};
      }
      break;
    case SegmentClass::L:
      q.unreachable = {{a, 2}, {b, 2}};
      q.reachable = {{a, 1}, {b, 1}};
      break;
    case SegmentClass::over: throw ParameterError("no extremal question for the 'over' profile");
  }
  return q;
}

/// Largest pebble count a distribution on L_n with the given profile can
/// have, per the closed forms: S f(C_n)-1, M f(C_{n+1})-1, L f(C_{n+2})-1.
inline std::uint64_t segment_profile_bound(std::uint32_t n, SegmentClass profile) {
  switch (profile) {
    case SegmentClass::S: return cycle_pebbling_formula(n) - 1;
    case SegmentClass::M: return cycle_pebbling_formula(n + 1) - 1;
    case SegmentClass::L: return cycle_pebbling_formula(n + 2) - 1;
    case SegmentClass::over: break;
  }
  throw ParameterError("no bound for the 'over' profile");
}

namespace detail {

inline void require_even_segment(std::uint32_t n) {
  if (n < 2 || n % 2 != 0) throw ParameterError("n must be even, got " + std::to_string(n));
}

/// Largest M-profile distribution on L_n, first in decreasing lexicographic
/// order, found by exhaustive search.
inline std::vector<Count> m_segment_loads(std::uint32_t n, PathEnd toward) {
  const Graph path = build_path(n);
  auto found = max_unsolvable(path, segment_profile_query(n, SegmentClass::M, toward));
  if (!found.exhaustive || !found.distribution) throw std::runtime_error("M-segment search did not finish");
  auto counts = found.distribution->counts();
  return {counts.begin(), counts.end()};
}

}  // namespace detail

/// Tight distribution on L_n for one profile: S and L put everything on the
/// midpoint; M comes from exhaustive search and reaches v_0.
inline ExtremalCase build_segment_extremal(std::uint32_t n, SegmentClass profile) {
  detail::require_even_segment(n);
  ExtremalCase c;
  c.graph_spec = "path:" + std::to_string(n);
  c.graph = build_path(n);
  c.distribution = Distribution(c.graph);
  c.name = "segment-" + std::string(to_string(profile)) + "(n=" + std::to_string(n) + ")";
  const Vertex a = 0, b = n;
  switch (profile) {
    case SegmentClass::S:
      c.distribution.add(n / 2, static_cast<Count>(segment_profile_bound(n, profile)));
      c.queries = {{a, 1, MovePolicy::unrestricted, Outcome::unsolvable}, {b, 1, MovePolicy::unrestricted, Outcome::unsolvable}};
      c.note = "f(C_n)-1 pebbles on the midpoint";
      break;
    case SegmentClass::M: {
      auto loads = detail::m_segment_loads(n, PathEnd::first);
      c.distribution = Distribution(c.graph, loads);
      c.queries = {{a, 1, MovePolicy::unrestricted, Outcome::solvable},
                   {a, 2, MovePolicy::unrestricted, Outcome::unsolvable},
                   {b, 1, MovePolicy::unrestricted, Outcome::unsolvable}};
      c.note = "largest v_0-reaching M distribution, first in decreasing lexicographic order: " + to_text(c.graph, c.distribution);
      break;
    }
    case SegmentClass::L:
      c.distribution.add(n / 2, static_cast<Count>(segment_profile_bound(n, profile)));
      c.queries = {{a, 1, MovePolicy::unrestricted, Outcome::solvable},
                   {b, 1, MovePolicy::unrestricted, Outcome::solvable},
                   {a, 2, MovePolicy::unrestricted, Outcome::unsolvable},
                   {b, 2, MovePolicy::unrestricted, Outcome::unsolvable}};
      c.note = "f(C_{n+2})-1 pebbles on the midpoint";
      break;
    case SegmentClass::over: throw ParameterError("no extremal case for the 'over' profile");
  }
  return c;
}

/// Segment pattern of D*(n,m): P_0 empty, then S, L, S, L, ..., S for even
/// m and S, L, ..., S, L, M, S for odd m.
inline std::vector<SegmentClass> dstar_pattern(std::uint32_t m) {
  if (m < 8) throw ParameterError("m must be >= 8, got " + std::to_string(m));
  std::vector<SegmentClass> out{SegmentClass::S};  // P_0 placeholder, left empty
  for (std::uint32_t i = 1; i < m; ++i) out.push_back(i % 2 == 1 ? SegmentClass::S : SegmentClass::L);
  if (m % 2 == 1) {
    out[m - 2] = SegmentClass::M;
    out[m - 1] = SegmentClass::S;
  }
  return out;
}

/// D*(n,m): the largest distribution with hub, v_0 and v_n unreachable.
inline ExtremalCase build_dstar(std::uint32_t n, std::uint32_t m) {
  require_jahangir_formula_range(n, m);
  ExtremalCase c;
  c.name = "dstar(" + std::to_string(n) + "," + std::to_string(m) + ")";
  c.graph_spec = "jahangir:" + std::to_string(n) + "," + std::to_string(m);
  c.graph = build_jahangir(n, m);
  c.distribution = Distribution(c.graph);
  const auto& layout = *c.graph.jahangir();
  const auto pattern = dstar_pattern(m);
  std::string m_note;
  for (std::uint32_t i = 1; i < m; ++i) {
    if (pattern[i] == SegmentClass::M) {
      // M must reach v_{n(i+1)}, the far end of its segment
      auto loads = detail::m_segment_loads(n, PathEnd::last);
      m_note = "; M on P_" + std::to_string(i) + " =";
      for (std::uint32_t j = 0; j <= n; ++j) {
        if (!loads[j]) continue;
        c.distribution.add(layout.segments[i][j], loads[j]);
        m_note += " " + c.graph.label(layout.segments[i][j]) + ":" + std::to_string(loads[j]);
      }
    } else {
      c.distribution.add(layout.segment_midpoint(i), static_cast<Count>(segment_profile_bound(n, pattern[i])));
    }
  }
  for (Vertex root : {layout.hub, layout.cycle_vertex(0), layout.cycle_vertex(n)})
    c.queries.push_back({root, 1, MovePolicy::unrestricted, Outcome::unsolvable});
  c.note = "P_0 empty, S and L loads on segment midpoints" + m_note;
  return c;
}

/// D*(n,m) plus f_t(C_{n+2}) pebbles, t = 2^{n/2+1}-1, on v_{4n+n/2}; one
/// pebble short of the Jahangir formula value and still not v_{n/2}-solvable.
inline ExtremalCase build_jahangir_lower_bound(std::uint32_t n, std::uint32_t m) {
  ExtremalCase c = build_dstar(n, m);
  c.name = "lower-bound(" + std::to_string(n) + "," + std::to_string(m) + ")";
  const auto& layout = *c.graph.jahangir();
  const std::uint64_t half = n / 2 + 1;
  const std::uint64_t extra = t_pebbling_even_cycle(half, detail::pow2(half) - 1);
  c.distribution.add(layout.segment_midpoint(4), static_cast<Count>(extra));
  c.queries = {{layout.cycle_vertex(n / 2), 1, MovePolicy::unrestricted, Outcome::unsolvable}};
  c.note = "D*(n,m) plus " + std::to_string(extra) + " pebbles on " + c.graph.label(layout.segment_midpoint(4));
  return c;
}

/// J_{2,3}, or J_{2,3} with `clones` copies of the hub, loaded so that v3
/// (v4 in one-based labels) cannot be reached with greedy moves:
/// {v1:3, v5:3, v0:1, u:1} plus one pebble per clone.
inline ExtremalCase build_greedy_counterexample(std::uint32_t clones = 0) {
  ExtremalCase c;
  c.graph_spec = clones == 0 ? "jahangir:2,3" : "clone:jahangir:2,3@u*" + std::to_string(clones);
  c.graph = build_graph(c.graph_spec);
  c.name = clones == 0 ? "greedy-J23" : "greedy-G" + std::to_string(clones);
  std::vector<Count> counts(c.graph.vertex_count(), 0);
  counts[1] = 3;
  counts[5] = 3;
  counts[0] = 1;
  counts[6] = 1;  // hub
  for (std::uint32_t i = 0; i < clones; ++i) counts[7 + i] = 1;
  c.distribution = Distribution(c.graph, std::move(counts));
  c.queries = {{3, 1, MovePolicy::greedy, Outcome::unsolvable}, {3, 1, MovePolicy::unrestricted, Outcome::solvable}};
  c.note = "3 pebbles on v1 and v5, one on v0, the hub and each clone; v2, v3, v4 empty";
  return c;
}

}  // namespace pebble
