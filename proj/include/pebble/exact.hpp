#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "pebble/distribution.hpp"
#include "pebble/formulas.hpp"
#include "pebble/graph.hpp"
#include "pebble/parallel.hpp"
#include "pebble/solver.hpp"

namespace pebble {

enum class Strategy {
  /// Grow size-k unsolvable distributions from size-(k-1) ones. Complete
  /// because unsolvability is closed under removing pebbles.
  extend,
  /// Test every size-k distribution.
  enumerate,
};

struct ExactOptions {
  /// Total solver states for one campaign (one call into this module).
  std::uint64_t state_budget = 100'000'000;
  unsigned threads = default_thread_count();
  Strategy strategy = Strategy::extend;
  /// Pruning switches; the budget inside is managed per call.
  SolverOptions solver;
};

struct RootedConstraint {
  Vertex root = 0;
  Count t = 1;
};

struct ExactResult {
  std::uint64_t value = 0;
  /// A largest unsolvable distribution, of size value - 1.
  std::optional<Distribution> witnessing_distribution;
  /// Root the value was attained at (pebbling_number only).
  std::optional<Vertex> root;
  /// True when every distribution was accounted for; false when sampled or
  /// when the budget ran out, in which case `value` is only a lower bound.
  bool exhaustive = true;
  std::uint64_t visited = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Shared state budget for a campaign.
class Budget {
public:
  explicit Budget(std::uint64_t cap) : cap_(cap) {}

  std::uint64_t remaining() const noexcept {
    const std::uint64_t used = used_.load();
    return used >= cap_ ? 0 : cap_ - used;
  }
  std::uint64_t used() const noexcept { return used_.load(); }
  void charge(std::uint64_t visited) noexcept { used_ += visited; }

private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_{0};
};

enum class Verdict { unsolvable, solvable, unknown };

namespace detail {

/// Per-worker solvers for a fixed constraint list.
class ConstraintChecker {
public:
  ConstraintChecker(const Graph& g, std::span<const RootedConstraint> constraints, MovePolicy policy, SolverOptions opts) {
    for (const auto& c : constraints) solvers_.emplace_back(g, SolveQuery{c.root, c.t, policy}, opts);
  }

  /// unsolvable iff unsolvable for every constraint.
  Verdict check(const Distribution& d, Budget& budget) {
    bool unknown = false;
    for (auto& s : solvers_) {
      const auto remaining = budget.remaining();
      if (remaining == 0) return Verdict::unknown;
      s.set_budget(remaining);
      auto r = s.solve(d);
      budget.charge(r.stats.visited);
      if (r.solvable()) return Verdict::solvable;
      if (r.outcome == Outcome::unknown) unknown = true;
    }
    return unknown ? Verdict::unknown : Verdict::unsolvable;
  }

  /// solvable iff solvable for every constraint.
  Verdict check_all_solvable(const Distribution& d, Budget& budget) {
    bool unknown = false;
    for (auto& s : solvers_) {
      const auto remaining = budget.remaining();
      if (remaining == 0) return Verdict::unknown;
      s.set_budget(remaining);
      auto r = s.solve(d);
      budget.charge(r.stats.visited);
      if (r.unsolvable()) return Verdict::unsolvable;
      if (r.outcome == Outcome::unknown) unknown = true;
    }
    return unknown ? Verdict::unknown : Verdict::solvable;
  }

private:
  std::vector<Solver> solvers_;
};

inline std::vector<Vertex> normalize_support(const Graph& g, std::vector<Vertex> support) {
  if (support.empty()) return DistributionEnumerator::all_vertices(g);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (Vertex v : support)
    if (v >= g.vertex_count()) throw ParameterError("support vertex out of range");
  return support;
}

using CountVector = std::vector<Count>;

/// Level k holds count vectors sorted in decreasing lexicographic order, the
/// same order DistributionEnumerator produces.
inline std::vector<CountVector> extend_level(const std::vector<CountVector>& prev, std::span<const Vertex> support) {
  std::vector<CountVector> cands;
  cands.reserve(prev.size() * support.size());
  for (const auto& p : prev) {
    for (Vertex v : support) {
      CountVector c = p;
      ++c[v];
      cands.push_back(std::move(c));
    }
  }
  std::sort(cands.begin(), cands.end(), std::greater<>());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  // every one-pebble removal must itself be unsolvable
  std::vector<CountVector> kept;
  kept.reserve(cands.size());
  for (auto& c : cands) {
    bool closed = true;
    for (Vertex w : support) {
      if (c[w] == 0) continue;
      --c[w];
      closed = std::binary_search(prev.begin(), prev.end(), c, std::greater<>());
      ++c[w];
      if (!closed) break;
    }
    if (closed) kept.push_back(std::move(c));
  }
  return kept;
}

}  // namespace detail

/// Outcome of exploring the downward-closed family of distributions that
/// are unsolvable for every constraint.
struct LevelExploration {
  /// True if a level with no unsolvable distribution was reached.
  bool complete = false;
  /// First empty level when complete, otherwise the level left undecided.
  std::uint64_t stop_level = 0;
  std::uint64_t visited = 0;
};

/// Calls on_level(k, level) for k = 0, 1, ... with every size-k distribution
/// on `support` that is unsolvable for all constraints, in decreasing
/// lexicographic order, until a level comes out empty.
template <typename OnLevel>
LevelExploration explore_unsolvable_levels(const Graph& g, std::span<const RootedConstraint> constraints, MovePolicy policy,
                                           std::vector<Vertex> support, const ExactOptions& opts, Budget& budget,
                                           OnLevel&& on_level) {
  if (constraints.empty()) throw ParameterError("at least one constraint is required");
  support = detail::normalize_support(g, std::move(support));
  const unsigned threads = std::max(1u, opts.threads);
  std::vector<detail::ConstraintChecker> workers;
  for (unsigned w = 0; w < threads; ++w) workers.emplace_back(g, constraints, policy, opts.solver);

  LevelExploration out;
  const std::uint64_t used_before = budget.used();
  std::vector<detail::CountVector> level{detail::CountVector(g.vertex_count(), 0)};
  on_level(std::uint64_t{0}, level);
  for (std::uint64_t k = 1;; ++k) {
    auto cands = detail::extend_level(level, support);
    std::vector<Verdict> verdicts(cands.size(), Verdict::unknown);
    parallel_chunks(cands.size(), threads, 64, [&](unsigned w, std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) verdicts[i] = workers[w].check(Distribution(g, cands[i]), budget);
    });
    out.visited = budget.used() - used_before;
    if (std::find(verdicts.begin(), verdicts.end(), Verdict::unknown) != verdicts.end()) {
      out.stop_level = k;
      return out;
    }
    std::vector<detail::CountVector> next;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (verdicts[i] == Verdict::unsolvable) next.push_back(std::move(cands[i]));
    if (next.empty()) {
      out.complete = true;
      out.stop_level = k;
      return out;
    }
    level = std::move(next);
    on_level(k, level);
  }
}

namespace detail {

inline ExactResult rooted_by_extension(const Graph& g, RootedConstraint c, MovePolicy policy,
                                       const std::vector<Vertex>& support, const ExactOptions& opts, Budget& budget) {
  ExactResult result;
  CountVector witness;
  auto exploration = explore_unsolvable_levels(g, std::span(&c, 1), policy, support, opts, budget,
                                               [&](std::uint64_t, const std::vector<CountVector>& level) { witness = level.front(); });
  result.value = exploration.stop_level;
  result.exhaustive = exploration.complete;
  result.visited = exploration.visited;
  result.witnessing_distribution = Distribution(g, witness);
  return result;
}

inline ExactResult rooted_by_enumeration(const Graph& g, RootedConstraint c, MovePolicy policy,
                                         const std::vector<Vertex>& support_in, const ExactOptions& opts, Budget& budget) {
  const auto support = normalize_support(g, support_in);
  const unsigned threads = std::max(1u, opts.threads);
  std::vector<ConstraintChecker> workers;
  for (unsigned w = 0; w < threads; ++w) workers.emplace_back(g, std::span(&c, 1), policy, opts.solver);

  ExactResult result;
  const std::uint64_t used_before = budget.used();
  Distribution witness(g);  // size 0 is always unsolvable for t >= 1
  for (Count k = 1;; ++k) {
    auto total = composition_count(k, support.size());
    if (!total) throw OverflowError("too many distributions to enumerate");
    constexpr std::size_t kChunk = 4096;
    const std::size_t chunks = static_cast<std::size_t>((*total + kChunk - 1) / kChunk);
    std::vector<std::uint64_t> first_bad(chunks, std::numeric_limits<std::uint64_t>::max());
    std::vector<char> unknown(chunks, 0);
    parallel_chunks(chunks, threads, 1, [&](unsigned w, std::size_t cb, std::size_t ce) {
      for (std::size_t chunk = cb; chunk < ce; ++chunk) {
        const std::uint64_t begin = std::uint64_t{chunk} * kChunk;
        const std::uint64_t end = std::min<std::uint64_t>(*total, begin + kChunk);
        DistributionEnumerator it(g, k, support);
        it.seek(begin);
        for (std::uint64_t i = begin; i < end && !it.done(); ++i, it.advance()) {
          auto v = workers[w].check(it.current(), budget);
          if (v == Verdict::unknown) {
            unknown[chunk] = 1;
            break;
          }
          if (v == Verdict::unsolvable) {
            first_bad[chunk] = i;
            break;
          }
        }
      }
    });
    result.visited = budget.used() - used_before;
    auto bad = std::find_if(first_bad.begin(), first_bad.end(),
                            [](std::uint64_t i) { return i != std::numeric_limits<std::uint64_t>::max(); });
    const auto first_unknown = std::find(unknown.begin(), unknown.end(), 1);
    if (first_unknown != unknown.end() && (bad == first_bad.end() || first_unknown - unknown.begin() <= bad - first_bad.begin())) {
      // an undecided chunk precedes every known failure, so nothing is settled at this size
      result.value = k;
      result.exhaustive = false;
      result.witnessing_distribution = witness;
      return result;
    }
    if (bad == first_bad.end()) {
      result.value = k;
      result.witnessing_distribution = witness;
      return result;
    }
    DistributionEnumerator it(g, k, support);
    it.seek(*bad);
    witness = it.current();
  }
}

}  // namespace detail

/// f_t(G, root) under `policy`: the least k such that every size-k
/// distribution on `support` (default: all vertices) is t-fold root-solvable.
inline ExactResult pebbling_number_rooted(const Graph& g, Vertex root, Count t = 1, MovePolicy policy = MovePolicy::unrestricted,
                                          const ExactOptions& opts = {}, const std::vector<Vertex>& support = {}) {
  if (root >= g.vertex_count()) throw ParameterError("root vertex out of range");
  if (t < 1) throw ParameterError("fold count t must be >= 1");
  const auto started = std::chrono::steady_clock::now();
  Budget budget(opts.state_budget);
  RootedConstraint c{root, t};
  ExactResult r = opts.strategy == Strategy::extend ? detail::rooted_by_extension(g, c, policy, support, opts, budget)
                                                    : detail::rooted_by_enumeration(g, c, policy, support, opts, budget);
  r.root = root;
  r.elapsed = std::chrono::steady_clock::now() - started;
  return r;
}

/// f_t(G) = max over roots of f_t(G, root).
inline ExactResult pebbling_number(const Graph& g, Count t = 1, MovePolicy policy = MovePolicy::unrestricted,
                                   const ExactOptions& opts = {}) {
  const auto started = std::chrono::steady_clock::now();
  Budget budget(opts.state_budget);
  ExactResult best;
  best.value = 0;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    RootedConstraint c{root, t};
    ExactResult r = opts.strategy == Strategy::extend ? detail::rooted_by_extension(g, c, policy, {}, opts, budget)
                                                      : detail::rooted_by_enumeration(g, c, policy, {}, opts, budget);
    if (!best.root || r.value > best.value) {
      best.value = r.value;
      best.witnessing_distribution = r.witnessing_distribution;
      best.root = root;
    }
    if (!r.exhaustive) {
      best.exhaustive = false;
      break;
    }
  }
  best.visited = budget.used();
  best.elapsed = std::chrono::steady_clock::now() - started;
  return best;
}

/// Size-k scan over every distribution on all vertices: how many fail to
/// reach at least one root.
struct SizeScan {
  std::uint64_t size = 0;
  std::uint64_t distributions = 0;
  std::uint64_t unsolvable = 0;
  std::uint64_t unknown = 0;
  /// First failing distribution in enumeration order, and a root it fails for.
  std::optional<std::pair<Distribution, Vertex>> example;
  std::uint64_t visited = 0;
};

inline SizeScan scan_size(const Graph& g, Count k, Count t = 1, MovePolicy policy = MovePolicy::unrestricted,
                          const ExactOptions& opts = {}) {
  Budget budget(opts.state_budget);
  const unsigned threads = std::max(1u, opts.threads);
  std::vector<std::vector<Solver>> workers(threads);
  for (auto& w : workers)
    for (Vertex r = 0; r < g.vertex_count(); ++r) w.emplace_back(g, SolveQuery{r, t, policy}, opts.solver);

  auto total = composition_count(k, g.vertex_count());
  if (!total) throw OverflowError("too many distributions to enumerate");
  SizeScan out;
  out.size = k;
  out.distributions = *total;
  constexpr std::size_t kChunk = 2048;
  const std::size_t chunks = static_cast<std::size_t>((*total + kChunk - 1) / kChunk);
  struct ChunkTally {
    std::uint64_t bad = 0, unknown = 0;
    std::optional<std::pair<std::uint64_t, Vertex>> first;
  };
  std::vector<ChunkTally> tallies(chunks);
  parallel_chunks(chunks, threads, 1, [&](unsigned w, std::size_t cb, std::size_t ce) {
    for (std::size_t chunk = cb; chunk < ce; ++chunk) {
      const std::uint64_t begin = std::uint64_t{chunk} * kChunk;
      const std::uint64_t end = std::min<std::uint64_t>(*total, begin + kChunk);
      DistributionEnumerator it(g, k);
      it.seek(begin);
      for (std::uint64_t i = begin; i < end && !it.done(); ++i, it.advance()) {
        bool failed = false, undecided = false;
        for (auto& s : workers[w]) {
          s.set_budget(std::max<std::uint64_t>(budget.remaining(), 1));
          auto r = s.solve(it.current());
          budget.charge(r.stats.visited);
          if (r.unsolvable()) {
            failed = true;
            if (!tallies[chunk].first) tallies[chunk].first = std::pair{i, s.query().root};
            break;
          }
          if (r.outcome == Outcome::unknown) undecided = true;
        }
        if (failed) ++tallies[chunk].bad;
        else if (undecided) ++tallies[chunk].unknown;
      }
    }
  });
  for (const auto& tally : tallies) {
    out.unsolvable += tally.bad;
    out.unknown += tally.unknown;
    if (!out.example && tally.first) {
      DistributionEnumerator it(g, k);
      it.seek(tally.first->first);
      out.example = std::pair{it.current(), tally.first->second};
    }
  }
  out.visited = budget.used();
  return out;
}

struct MaxUnsolvableQuery {
  /// Every one of these must be unsolvable.
  std::vector<RootedConstraint> unreachable;
  /// Every one of these must be solvable (optional profile filter).
  std::vector<RootedConstraint> reachable;
  /// Vertices forced to hold no pebbles.
  std::vector<Vertex> zero_set;
  MovePolicy policy = MovePolicy::unrestricted;
};

struct MaxUnsolvableResult {
  std::uint64_t size = 0;
  /// First maximum distribution in decreasing lexicographic order; empty if
  /// no distribution meets the profile.
  std::optional<Distribution> distribution;
  bool exhaustive = true;
  std::uint64_t visited = 0;
};

/// Largest distribution that is unsolvable for every `unreachable`
/// constraint, avoids `zero_set`, and is solvable for every `reachable` one.
inline MaxUnsolvableResult max_unsolvable(const Graph& g, const MaxUnsolvableQuery& q, const ExactOptions& opts = {}) {
  Budget budget(opts.state_budget);
  std::vector<Vertex> support;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (std::find(q.zero_set.begin(), q.zero_set.end(), v) == q.zero_set.end()) support.push_back(v);
  MaxUnsolvableResult out;
  if (support.empty()) {
    out.distribution = Distribution(g);
    return out;
  }
  std::vector<std::vector<detail::CountVector>> levels;
  auto exploration = explore_unsolvable_levels(g, q.unreachable, q.policy, support, opts, budget,
                                               [&](std::uint64_t, const std::vector<detail::CountVector>& level) { levels.push_back(level); });
  out.exhaustive = exploration.complete;
  if (q.reachable.empty()) {
    out.size = levels.size() - 1;
    out.distribution = Distribution(g, levels.back().front());
  } else {
    detail::ConstraintChecker checker(g, q.reachable, q.policy, opts.solver);
    for (std::size_t k = levels.size(); k-- > 0 && !out.distribution;) {
      for (const auto& c : levels[k]) {
        Distribution d(g, c);
        auto v = checker.check_all_solvable(d, budget);
        if (v == Verdict::unknown) out.exhaustive = false;
        if (v == Verdict::solvable) {
          out.size = k;
          out.distribution = std::move(d);
          break;
        }
      }
    }
  }
  out.visited = budget.used();
  return out;
}

/// Reachability profile of a path distribution with respect to its ends.
enum class SegmentClass {
  S,     // neither end reachable
  M,     // exactly one end reachable, not 2-reachable
  L,     // both ends reachable, neither 2-reachable
  over,  // some end 2-reachable
};

inline std::string_view to_string(SegmentClass c) {
  switch (c) {
    case SegmentClass::S: return "S";
    case SegmentClass::M: return "M";
    case SegmentClass::L: return "L";
    case SegmentClass::over: return "over";
  }
  return "?";
}

inline SegmentClass classify_segment(const Graph& g, const Distribution& d, Vertex end_a, Vertex end_b,
                                     const SolverOptions& opts = {}) {
  auto reach = [&](Vertex v, Count t) {
    auto r = is_solvable(g, d, SolveQuery{v, t, MovePolicy::unrestricted}, opts);
    if (r.outcome == Outcome::unknown) throw std::runtime_error("segment classification exceeded the state budget");
    return r.solvable();
  };
  if (reach(end_a, 2) || reach(end_b, 2)) return SegmentClass::over;
  const bool a = reach(end_a, 1);
  const bool b = reach(end_b, 1);
  if (a && b) return SegmentClass::L;
  if (a || b) return SegmentClass::M;
  return SegmentClass::S;
}

/// Classifies d on L_n by its end vertices v_0 and v_n.
inline SegmentClass classify_path_segment(const Graph& path, const Distribution& d, const SolverOptions& opts = {}) {
  if (path.vertex_count() < 2) throw ParameterError("a path segment needs two ends");
  return classify_segment(path, d, 0, static_cast<Vertex>(path.vertex_count() - 1), opts);
}

struct SampleCase {
  Distribution distribution;
  Vertex root = 0;
};

struct SampleReport {
  std::uint64_t trials = 0;
  std::vector<SampleCase> failures;  // proven unsolvable
  std::vector<SampleCase> unknowns;  // undecided within budget
  std::uint64_t visited = 0;
  std::chrono::nanoseconds elapsed{0};
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Trial i draws a uniform size-k distribution and a uniform root from a
/// generator seeded by (seed, i), so results do not depend on threading.
inline SampleCase sample_trial(const Graph& g, Count k, std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(trial)));
  SampleCase c{sample_distribution(g, k, rng), 0};
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.vertex_count() - 1));
  c.root = pick(rng);
  return c;
}

/// Spot-checks "every size-k distribution is solvable" on random instances.
inline SampleReport sample_verify_solvable(const Graph& g, Count k, std::uint64_t trials, std::uint64_t seed,
                                           MovePolicy policy = MovePolicy::unrestricted, const ExactOptions& opts = {}) {
  const auto started = std::chrono::steady_clock::now();
  Budget budget(opts.state_budget);
  const unsigned threads = std::max(1u, opts.threads);
  std::vector<std::vector<std::unique_ptr<Solver>>> workers(threads);
  for (auto& w : workers) w.resize(g.vertex_count());
  std::vector<Verdict> verdicts(trials, Verdict::unknown);
  parallel_chunks(trials, threads, 16, [&](unsigned w, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      auto c = sample_trial(g, k, seed, i);
      auto& solver = workers[w][c.root];
      if (!solver) solver = std::make_unique<Solver>(g, SolveQuery{c.root, 1, policy}, opts.solver);
      const auto remaining = budget.remaining();
      if (remaining == 0) continue;
      solver->set_budget(remaining);
      auto r = solver->solve(c.distribution);
      budget.charge(r.stats.visited);
      verdicts[i] = r.solvable() ? Verdict::solvable : (r.unsolvable() ? Verdict::unsolvable : Verdict::unknown);
    }
  });
  SampleReport report;
  report.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (verdicts[i] == Verdict::solvable) continue;
    auto c = sample_trial(g, k, seed, i);
    (verdicts[i] == Verdict::unsolvable ? report.failures : report.unknowns).push_back(std::move(c));
  }
  report.visited = budget.used();
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

/// One comparison of t 2^k against brute-force f_t(C_{2k}).
struct TRuleCheck {
  std::uint64_t half_length = 0;
  Count t = 0;
  std::uint64_t formula = 0;
  ExactResult brute;
  bool agrees() const noexcept { return brute.exhaustive && brute.value == formula; }
};

inline std::vector<std::pair<std::uint64_t, Count>> default_t_rule_cases() {
  return {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}};
}

/// Gate for t_pebbling_even_cycle: formula output is only trusted once every
/// case here agrees.
inline std::vector<TRuleCheck> validate_t_pebbling_rule(std::span<const std::pair<std::uint64_t, Count>> cases,
                                                         const ExactOptions& opts = {}) {
  std::vector<TRuleCheck> out;
  for (auto [k, t] : cases) {
    TRuleCheck check;
    check.half_length = k;
    check.t = t;
    check.formula = t_pebbling_even_cycle(k, t);
    check.brute = pebbling_number(build_cycle(static_cast<std::uint32_t>(2 * k)), t, MovePolicy::unrestricted, opts);
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace pebble
