#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pebble/distribution.hpp"
#include "pebble/error.hpp"
#include "pebble/graph.hpp"
#include "pebble/state_table.hpp"

namespace pebble {

/// Removes two pebbles from `from` and places one on the adjacent `to`.
struct Move {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

enum class MovePolicy {
  unrestricted,
  /// Only moves with dist(to, root) < dist(from, root).
  greedy,
};

inline std::string_view to_string(MovePolicy p) { return p == MovePolicy::greedy ? "greedy" : "unrestricted"; }

inline MovePolicy parse_policy(std::string_view s) {
  if (s == "greedy") return MovePolicy::greedy;
  if (s == "unrestricted") return MovePolicy::unrestricted;
  throw ParameterError("unknown move policy '" + std::string(s) + "'");
}

struct SolveQuery {
  Vertex root = 0;
  Count t = 1;
  MovePolicy policy = MovePolicy::unrestricted;
};

/// A move sequence with its start and end distributions.
struct Witness {
  Distribution start;
  std::vector<Move> moves;
  Distribution end;

  /// |start| - |end|; every move costs one pebble.
  std::uint64_t cost() const noexcept { return moves.size(); }
};

enum class Outcome { solvable, unsolvable, unknown };
enum class Certificate { none, weight_bound, exhausted_search };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::solvable: return "solvable";
    case Outcome::unsolvable: return "unsolvable";
    case Outcome::unknown: return "unknown";
  }
  return "?";
}

inline std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::none: return "none";
    case Certificate::weight_bound: return "weight-bound";
    case Certificate::exhausted_search: return "exhausted-search";
  }
  return "?";
}

struct SolveStats {
  std::uint64_t visited = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t dominance_hits = 0;
  std::uint64_t weight_cuts = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  Outcome outcome = Outcome::unknown;
  std::optional<Witness> witness;  // iff solvable
  Certificate certificate = Certificate::none;
  SolveStats stats;

  bool solvable() const noexcept { return outcome == Outcome::solvable; }
  bool unsolvable() const noexcept { return outcome == Outcome::unsolvable; }
};

struct SolverOptions {
  /// Expanded search states before giving up with Outcome::unknown.
  std::uint64_t state_budget = 100'000'000;
  bool weight_pruning = true;
  bool transposition_table = true;
  bool dominance_pruning = true;
  /// The table of unsolvable states is dropped when it grows past this.
  std::size_t memo_limit = std::size_t{1} << 25;
};

inline Distribution apply_move(const Graph& g, const Distribution& d, Move mv) {
  require_same_graph(g, d);
  if (!g.adjacent(mv.from, mv.to))
    throw MoveError("vertices " + std::to_string(mv.from) + " and " + std::to_string(mv.to) + " are not adjacent");
  if (d[mv.from] < 2) throw MoveError("vertex " + g.label(mv.from) + " holds fewer than two pebbles");
  Distribution out = d;
  out.remove(mv.from, 2);
  out.add(mv.to, 1);
  return out;
}

/// Plays `moves` from `start`; throws MoveError at the first illegal move.
inline Distribution replay(const Graph& g, const Distribution& start, std::span<const Move> moves) {
  Distribution d = start;
  for (const Move& mv : moves) d = apply_move(g, d, mv);
  return d;
}

inline Witness make_witness(const Graph& g, const Distribution& start, std::vector<Move> moves) {
  Distribution end = replay(g, start, moves);
  return Witness{start, std::move(moves), std::move(end)};
}

/// Proof of unsolvability from the potential sum_v d(v) 2^{-dist(v, root)},
/// which no pebbling move increases. `floor_weight` is the floor of that sum.
struct WeightCertificate {
  std::uint64_t floor_weight = 0;
  Count t = 0;
};

namespace detail {

/// floor(sum_k by_distance[k] * 2^{-k}), exactly.
inline std::uint64_t floor_weight(std::span<const std::uint64_t> by_distance) {
  std::uint64_t carry = 0;
  for (std::size_t k = by_distance.size(); k-- > 1;) carry = (carry + by_distance[k]) / 2;
  return (by_distance.empty() ? 0 : by_distance[0]) + carry;
}

}  // namespace detail

/// Certificate iff sum_v d(v) 2^{-dist(v, root)} < t.
inline std::optional<WeightCertificate> weight_certificate(const Graph& g, const Distribution& d, Vertex root, Count t) {
  require_same_graph(g, d);
  auto dist = distances_from(g, root);
  std::uint32_t far = 0;
  for (auto x : dist) far = std::max(far, x);
  std::vector<std::uint64_t> buckets(far + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) buckets[dist[v]] += d[v];
  // floor(W) < t  <=>  W < t for integer t
  const std::uint64_t w = detail::floor_weight(buckets);
  if (w < t) return WeightCertificate{w, t};
  return std::nullopt;
}

/// Exact t-fold rooted solvability by depth-first search over distributions.
///
/// Pruning (all sound):
///  - weight potential below t,
///  - transposition table of states already shown unsolvable,
///  - dominance: if d + one pebble is known unsolvable, so is d,
///  - the root never fires, since pebbles leaving the root never help it.
///
/// The table persists across solve() calls; it is only valid for this
/// (graph, query) pair, which the solver is bound to.
class Solver {
public:
  Solver(const Graph& g, SolveQuery q, SolverOptions opts = {})
      : graph_(&g), query_(q), opts_(opts) {
    if (q.root >= g.vertex_count()) throw ParameterError("root vertex out of range");
    if (q.t < 1) throw ParameterError("fold count t must be >= 1");
    dist_ = distances_from(g, q.root);
    std::uint32_t far = 0;
    for (auto x : dist_) far = std::max(far, x);
    buckets_.assign(far + 1, 0);
    // neighbour lists ordered toward the root first
    ordered_.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (Vertex w : g.neighbors(v)) {
        if (q.policy == MovePolicy::greedy && dist_[w] >= dist_[v]) continue;
        ordered_[v].push_back(w);
      }
      std::stable_sort(ordered_[v].begin(), ordered_[v].end(),
                       [&](Vertex a, Vertex b) { return dist_[a] < dist_[b]; });
    }
    by_distance_.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) by_distance_[v] = v;
    std::stable_sort(by_distance_.begin(), by_distance_.end(),
                     [&](Vertex a, Vertex b) { return dist_[a] < dist_[b]; });
  }

  const SolveQuery& query() const noexcept { return query_; }
  const Graph& graph() const noexcept { return *graph_; }
  const std::vector<std::uint32_t>& distances() const noexcept { return dist_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }

  void set_budget(std::uint64_t budget) noexcept { opts_.state_budget = budget; }

  SolveResult solve(const Distribution& d) {
    require_same_graph(*graph_, d);
    const auto started = std::chrono::steady_clock::now();
    SolveResult result = run(d);
    result.stats.elapsed = std::chrono::steady_clock::now() - started;
    return result;
  }

private:
  struct Frame {
    std::size_t begin;
    std::size_t end;
    std::size_t next;
    Move entering;
  };

  SolveResult run(const Distribution& d) {
    SolveResult result;
    const Vertex root = query_.root;
    const Count t = query_.t;

    if (d[root] >= t) {
      result.outcome = Outcome::solvable;
      result.witness = Witness{d, {}, d};
      return result;
    }

    counts_.assign(d.counts().begin(), d.counts().end());
    if (opts_.weight_pruning && weight_below_target()) {
      result.outcome = Outcome::unsolvable;
      result.certificate = Certificate::weight_bound;
      result.stats.weight_cuts = 1;
      return result;
    }

    prepare_keys(d.size());
    encode_all();
    if (opts_.transposition_table && memo_.contains(key_)) {
      result.outcome = Outcome::unsolvable;
      result.certificate = Certificate::exhausted_search;
      result.stats.memo_hits = 1;
      return result;
    }

    auto& stats = result.stats;
    moves_.clear();
    stack_.clear();
    stats.visited = 1;
    push_frame(Move{});

    while (!stack_.empty()) {
      Frame& f = stack_.back();
      if (f.next == f.end) {
        if (opts_.transposition_table) remember_unsolvable();
        const Move entering = f.entering;
        moves_.resize(f.begin);
        stack_.pop_back();
        if (!stack_.empty()) undo(entering);
        continue;
      }
      const Move mv = moves_[f.next++];
      apply(mv);
      if (counts_[root] >= t) {
        std::vector<Move> path;
        path.reserve(stack_.size());
        for (std::size_t i = 1; i < stack_.size(); ++i) path.push_back(stack_[i].entering);
        path.push_back(mv);
        result.outcome = Outcome::solvable;
        result.witness = make_witness(*graph_, d, std::move(path));
        return result;
      }
      if (pruned(stats)) {
        undo(mv);
        continue;
      }
      if (stats.visited >= opts_.state_budget) {
        result.outcome = Outcome::unknown;
        return result;
      }
      ++stats.visited;
      push_frame(mv);
    }
    result.outcome = Outcome::unsolvable;
    result.certificate = Certificate::exhausted_search;
    return result;
  }

  void push_frame(Move entering) {
    const std::size_t begin = moves_.size();
    // toward-root moves first, nearest sources first; the root never fires
    for (Vertex v : by_distance_) {
      if (v == query_.root || counts_[v] < 2) continue;
      for (Vertex w : ordered_[v])
        if (dist_[w] < dist_[v]) moves_.push_back(Move{v, w});
    }
    for (Vertex v : by_distance_) {
      if (v == query_.root || counts_[v] < 2) continue;
      for (Vertex w : ordered_[v])
        if (dist_[w] >= dist_[v]) moves_.push_back(Move{v, w});
    }
    stack_.push_back(Frame{begin, moves_.size(), begin, entering});
  }

  bool pruned(SolveStats& stats) {
    if (opts_.weight_pruning && weight_below_target()) {
      ++stats.weight_cuts;
      return true;
    }
    if (!opts_.transposition_table) return false;
    const std::uint64_t h = hash_bytes(key_);
    if (memo_.contains(key_, h)) {
      ++stats.memo_hits;
      return true;
    }
    if (opts_.dominance_pruning) {
      for (Vertex v = 0; v < counts_.size(); ++v) {
        if (v == query_.root) continue;
        put(v, counts_[v] + 1);
        const bool hit = memo_.contains(key_);
        put(v, counts_[v]);
        if (hit) {
          ++stats.dominance_hits;
          return true;
        }
      }
    }
    return false;
  }

  bool weight_below_target() {
    std::fill(buckets_.begin(), buckets_.end(), 0);
    for (Vertex v = 0; v < counts_.size(); ++v) buckets_[dist_[v]] += counts_[v];
    return detail::floor_weight(buckets_) < query_.t;
  }

  void remember_unsolvable() {
    if (memo_.size() >= opts_.memo_limit) memo_.clear();
    memo_.insert(key_);
  }

  void apply(Move mv) {
    counts_[mv.from] -= 2;
    counts_[mv.to] += 1;
    put(mv.from, counts_[mv.from]);
    put(mv.to, counts_[mv.to]);
  }

  void undo(Move mv) {
    counts_[mv.from] += 2;
    counts_[mv.to] -= 1;
    put(mv.from, counts_[mv.from]);
    put(mv.to, counts_[mv.to]);
  }

  void prepare_keys(std::uint64_t total) {
    // +1 headroom for the dominance probe
    std::size_t width = total + 1 < 0xffU ? 1 : (total + 1 < 0xffffU ? 2 : 4);
    width = std::max(width, width_);
    if (width != width_ || memo_.key_bytes() != width * counts_.size()) {
      width_ = width;
      memo_.reset(width * counts_.size());
    }
    key_.assign(width_ * counts_.size(), 0);
  }

  void encode_all() {
    for (Vertex v = 0; v < counts_.size(); ++v) put(v, counts_[v]);
  }

  void put(Vertex v, Count c) {
    std::uint8_t* p = key_.data() + std::size_t{v} * width_;
    for (std::size_t b = 0; b < width_; ++b) p[b] = static_cast<std::uint8_t>(c >> (8 * b));
  }

  const Graph* graph_;
  SolveQuery query_;
  SolverOptions opts_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::vector<Vertex>> ordered_;
  std::vector<Vertex> by_distance_;
  std::vector<std::uint64_t> buckets_;
  std::vector<Count> counts_;
  std::vector<std::uint8_t> key_;
  std::size_t width_ = 0;
  StateTable memo_;
  std::vector<Move> moves_;
  std::vector<Frame> stack_;
};

inline SolveResult is_solvable(const Graph& g, const Distribution& d, SolveQuery q, SolverOptions opts = {}) {
  Solver solver(g, q, opts);
  return solver.solve(d);
}

/// "from->to" label pairs, comma separated.
inline std::string to_text(const Graph& g, std::span<const Move> moves) {
  std::string out;
  for (const Move& mv : moves) {
    if (!out.empty()) out += ',';
    out += g.label(mv.from) + "->" + g.label(mv.to);
  }
  return out;
}

inline std::vector<Move> parse_moves(const Graph& g, std::string_view text) {
  std::vector<Move> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = text.substr(pos, comma - pos);
    auto arrow = item.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected 'from->to'", pos);
    auto from = g.find(item.substr(0, arrow));
    auto to = g.find(item.substr(arrow + 2));
    if (!from || !to) throw ParseError("unknown vertex in move '" + std::string(item) + "'", pos);
    out.push_back(Move{*from, *to});
    pos = comma + 1;
  }
  return out;
}

}  // namespace pebble
