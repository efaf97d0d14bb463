#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pebble/error.hpp"
#include "pebble/graph.hpp"

namespace pebble {

/// Where a formula value comes from, as printed in reports.
enum class Provenance {
  theorem,
  /// Not derived here; trusted only after brute-force agreement.
  external_validated,
  /// A value fixed by convention (f(C_2) = 2).
  convention,
};

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::theorem: return "theorem";
    case Provenance::external_validated: return "external-validated";
    case Provenance::convention: return "convention";
  }
  return "?";
}

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("formula value overflows 64 bits");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("formula value overflows 64 bits");
  return r;
}

inline std::uint64_t pow2(std::uint64_t k) {
  if (k >= 64) throw OverflowError("2^" + std::to_string(k) + " overflows 64 bits");
  return std::uint64_t{1} << k;
}

}  // namespace detail

/// Directed path lengths of a path partition of a root-oriented tree,
/// nonincreasing.
struct PathPartition {
  std::vector<std::uint32_t> sizes;

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto a : sizes) s += a;
    return s;
  }
  friend bool operator==(const PathPartition&, const PathPartition&) = default;
};

/// Parent array of g rooted at `root` (parent[root] == root). Throws if g is
/// not a tree.
inline std::vector<Vertex> tree_parents(const Graph& g, Vertex root) {
  if (root >= g.vertex_count()) throw ParameterError("root vertex out of range");
  if (g.edge_count() + 1 != g.vertex_count()) throw ParameterError("graph is not a tree");
  std::vector<Vertex> parent(g.vertex_count(), root);
  std::vector<Vertex> stack{root};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[root] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      stack.push_back(w);
    }
  }
  return parent;
}

/// The maximum path partition of the tree oriented toward `root`: at every
/// vertex the path arriving from its tallest child continues upward and
/// every other child starts a fresh path. This is the same as peeling off a
/// longest remaining directed path again and again.
inline PathPartition max_path_partition(const Graph& tree, Vertex root) {
  auto parent = tree_parents(tree, root);
  const std::size_t n = tree.vertex_count();
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v = 0; v < n; ++v)
    if (v != root) children[parent[v]].push_back(v);

  // heights in reverse BFS order
  std::vector<Vertex> order{root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex c : children[order[i]]) order.push_back(c);
  std::vector<std::uint32_t> height(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (Vertex c : children[*it]) height[*it] = std::max(height[*it], height[c] + 1);

  PathPartition out;
  for (Vertex v : order) {
    if (children[v].empty()) continue;
    auto tallest = std::max_element(children[v].begin(), children[v].end(),
                                    [&](Vertex a, Vertex b) { return height[a] < height[b]; });
    // paths end at the root, so every root child heads its own path
    for (Vertex c : children[v])
      if (v == root || c != *tallest) out.sizes.push_back(height[c] + 1);
  }
  std::sort(out.sizes.begin(), out.sizes.end(), std::greater<>());
  return out;
}

/// f(T, v) = sum 2^{a_i} - r + 1 over the maximum path partition (a_1..a_r).
inline std::uint64_t tree_pebbling_formula(const Graph& tree, Vertex root) {
  auto partition = max_path_partition(tree, root);
  std::uint64_t sum = 0;
  for (auto a : partition.sizes) sum = detail::checked_add(sum, detail::pow2(a));
  return sum - partition.sizes.size() + 1;
}

/// f(C_k): 2^n for k = 2n, 2 floor(2^{n+1} / 3) + 1 for k = 2n + 1.
/// k = 2 is accepted by convention and gives 2.
inline std::uint64_t cycle_pebbling_formula(std::uint64_t k) {
  if (k < 2) throw ParameterError("cycle length must be >= 2 (k = 2 by convention), got " + std::to_string(k));
  const std::uint64_t n = k / 2;
  if (k % 2 == 0) return detail::pow2(n);
  return detail::checked_add(detail::checked_mul(2, detail::pow2(n + 1) / 3), 1);
}

inline Provenance cycle_formula_provenance(std::uint64_t k) {
  return k == 2 ? Provenance::convention : Provenance::theorem;
}

struct ConvexityCheck {
  std::uint64_t n = 0;
  std::uint64_t lhs = 0;  // f(C_{n-1}) + f(C_{n+1})
  std::uint64_t rhs = 0;  // 2 f(C_n)
  bool holds() const noexcept { return lhs >= rhs; }
};

/// f(C_{n-1}) + f(C_{n+1}) >= 2 f(C_n) for each n in [lo, hi].
inline std::vector<ConvexityCheck> check_cycle_convexity(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 3) throw ParameterError("convexity range must start at n >= 3");
  std::vector<ConvexityCheck> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    ConvexityCheck c;
    c.n = n;
    c.lhs = detail::checked_add(cycle_pebbling_formula(n - 1), cycle_pebbling_formula(n + 1));
    c.rhs = detail::checked_mul(2, cycle_pebbling_formula(n));
    out.push_back(c);
  }
  return out;
}

/// f_t(C_{2k}) = t 2^k. This rule is not derived here; callers gate it on
/// brute-force agreement (see exact.hpp: validate_t_pebbling_rule).
inline std::uint64_t t_pebbling_even_cycle(std::uint64_t half_length, std::uint64_t t) {
  if (half_length < 1) throw ParameterError("half-length k must be >= 1");
  if (t < 1) throw ParameterError("fold count t must be >= 1");
  return detail::checked_mul(t, detail::pow2(half_length));
}

/// Largest S, M and L path loads and their total alpha on J_{n,m}.
struct AlphaBreakdown {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t s_max = 0;  // f(C_n) - 1
  std::uint64_t m_max = 0;  // f(C_{n+1}) - 1
  std::uint64_t l_max = 0;  // f(C_{n+2}) - 1
  std::uint64_t alpha = 0;
};

inline void require_jahangir_formula_range(std::uint64_t n, std::uint64_t m) {
  if (n < 2 || n % 2 != 0) throw ParameterError("n must be even (the Jahangir formula covers even n >= 2), got " + std::to_string(n));
  if (m < 8) throw ParameterError("m must be >= 8 (the Jahangir formula covers m >= 8), got " + std::to_string(m));
}

inline AlphaBreakdown alpha(std::uint64_t n, std::uint64_t m) {
  require_jahangir_formula_range(n, m);
  using detail::checked_add;
  using detail::checked_mul;
  const std::uint64_t fn = cycle_pebbling_formula(n);
  const std::uint64_t fn1 = cycle_pebbling_formula(n + 1);
  const std::uint64_t fn2 = cycle_pebbling_formula(n + 2);
  AlphaBreakdown out{n, m, fn - 1, fn1 - 1, fn2 - 1, 0};
  const std::uint64_t pair = fn + fn2 - 2;
  if (m % 2 == 0) {
    out.alpha = checked_mul(m / 2, pair) - fn2 + 1;
  } else {
    out.alpha = checked_add(checked_mul((m - 1) / 2, pair), fn1) - fn2;
  }
  return out;
}

/// f(J_{n,m}) = f_{2^{n/2+1}-1}(C_{n+2}) + alpha + 1 for even n, m >= 8.
inline std::uint64_t jahangir_pebbling_formula(std::uint64_t n, std::uint64_t m) {
  require_jahangir_formula_range(n, m);
  const std::uint64_t half = n / 2 + 1;
  const std::uint64_t fold = detail::pow2(half) - 1;
  return detail::checked_add(detail::checked_add(t_pebbling_even_cycle(half, fold), alpha(n, m).alpha), 1);
}

/// f(J_{2,m}) = 2m + 10 for m >= 8.
inline std::uint64_t j2m_formula(std::uint64_t m) {
  if (m < 8) throw ParameterError("m must be >= 8 for f(J_{2,m}) = 2m + 10, got " + std::to_string(m));
  return detail::checked_add(detail::checked_mul(2, m), 10);
}

}  // namespace pebble
