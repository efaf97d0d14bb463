#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pebble/error.hpp"
#include "pebble/graph.hpp"

namespace pebble {

using Count = std::uint32_t;

/// Pebble counts per vertex of one particular graph.
class Distribution {
public:
  Distribution() = default;

  explicit Distribution(const Graph& g) : counts_(g.vertex_count(), 0), graph_(g.fingerprint()) {}

  Distribution(const Graph& g, std::vector<Count> counts) : counts_(std::move(counts)), graph_(g.fingerprint()) {
    if (counts_.size() != g.vertex_count()) throw GraphMismatch("count vector does not match vertex count");
    for (Count c : counts_) size_ += c;
  }

  std::size_t vertex_count() const noexcept { return counts_.size(); }
  std::uint64_t size() const noexcept { return size_; }
  Count operator[](Vertex v) const { return counts_[v]; }
  Count at(Vertex v) const { return counts_.at(v); }
  std::span<const Count> counts() const noexcept { return counts_; }
  std::uint64_t graph_fingerprint() const noexcept { return graph_; }

  void add(Vertex v, Count k = 1) {
    Count& c = counts_.at(v);
    if (k > std::numeric_limits<Count>::max() - c) throw OverflowError("pebble count overflow at vertex " + std::to_string(v));
    c += k;
    size_ += k;
  }

  void remove(Vertex v, Count k = 1) {
    Count& c = counts_.at(v);
    if (c < k) throw MoveError("vertex " + std::to_string(v) + " holds fewer than " + std::to_string(k) + " pebbles");
    c -= k;
    size_ -= k;
  }

  void set(Vertex v, Count k) {
    Count& c = counts_.at(v);
    size_ = size_ - c + k;
    c = k;
  }

  bool belongs_to(const Graph& g) const noexcept {
    return graph_ == g.fingerprint() && counts_.size() == g.vertex_count();
  }

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.graph_ == b.graph_ && a.counts_ == b.counts_;
  }
  friend std::strong_ordering operator<=>(const Distribution& a, const Distribution& b) {
    return a.counts_ <=> b.counts_;
  }

private:
  std::vector<Count> counts_;
  std::uint64_t size_ = 0;
  std::uint64_t graph_ = 0;
};

/// |D(A)|.
inline std::uint64_t total_on(const Distribution& d, std::span<const Vertex> subset) {
  std::uint64_t total = 0;
  for (Vertex v : subset) total += d.at(v);
  return total;
}

/// True iff d(v) >= d2(v) for every vertex.
inline bool contains(const Distribution& d, const Distribution& d2) {
  if (d.graph_fingerprint() != d2.graph_fingerprint() || d.vertex_count() != d2.vertex_count())
    throw GraphMismatch("distributions belong to different graphs");
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (d[v] < d2[v]) return false;
  return true;
}

inline void require_same_graph(const Graph& g, const Distribution& d) {
  if (!d.belongs_to(g)) throw GraphMismatch("distribution was created for a different graph");
}

/// Number of weak compositions of k into `parts` parts, or nullopt on overflow.
inline std::optional<std::uint64_t> composition_count(std::uint64_t k, std::uint64_t parts) {
  if (parts == 0) return k == 0 ? std::optional<std::uint64_t>{1} : std::optional<std::uint64_t>{0};
  // C(k + parts - 1, parts - 1), computed incrementally so every prefix is an integer
  const std::uint64_t r = std::min<std::uint64_t>(parts - 1, k);
  const std::uint64_t top = k + parts - 1;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * x / i is exact; divide out the common factor before multiplying
    const std::uint64_t x = top - r + i;
    const std::uint64_t g = std::gcd(acc, i);
    const std::uint64_t factor = x / (i / g);
    acc /= g;
    if (factor != 0 && acc > std::numeric_limits<std::uint64_t>::max() / factor) return std::nullopt;
    acc *= factor;
  }
  return acc;
}

/// Walks every distribution of exactly `size` pebbles on `support`, one at a
/// time, in lexicographically decreasing order of the count vector: for two
/// vertices and two pebbles this is {2,0}, {1,1}, {0,2}.
class DistributionEnumerator {
public:
  DistributionEnumerator(const Graph& g, Count size, std::vector<Vertex> support)
      : current_(g), support_(std::move(support)), parts_(support_.size(), 0) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    parts_.assign(support_.size(), 0);
    for (Vertex v : support_)
      if (v >= g.vertex_count()) throw ParameterError("support vertex out of range");
    if (support_.empty()) {
      done_ = size != 0;
    } else {
      parts_[0] = size;
    }
    sync();
  }

  DistributionEnumerator(const Graph& g, Count size) : DistributionEnumerator(g, size, all_vertices(g)) {}

  /// Positions the enumerator at the index-th item (0-based) of the sequence.
  void seek(std::uint64_t index) {
    if (support_.empty()) {
      done_ = !(index == 0 && total() == 0);
      return;
    }
    Count remaining = total();
    const std::size_t s = parts_.size();
    for (std::size_t i = 0; i + 1 < s; ++i) {
      // items whose part i equals c, for c from `remaining` downwards
      Count c = remaining;
      while (true) {
        auto block = composition_count(remaining - c, s - i - 1);
        if (!block) throw OverflowError("composition index out of range");
        if (index < *block) break;
        index -= *block;
        if (c == 0) {
          done_ = true;
          return;
        }
        --c;
      }
      parts_[i] = c;
      remaining -= c;
    }
    parts_[s - 1] = remaining;
    done_ = index != 0;
    sync();
  }

  bool done() const noexcept { return done_; }
  const Distribution& current() const noexcept { return current_; }

  void advance() {
    if (done_) return;
    const std::size_t s = parts_.size();
    if (s < 2) {
      done_ = true;
      return;
    }
    const Count last = parts_[s - 1];
    std::size_t i = s - 1;
    while (i > 0 && parts_[i - 1] == 0) --i;
    if (i == 0) {
      done_ = true;
      return;
    }
    --i;  // rightmost position below s-1 holding a pebble
    parts_[i] -= 1;
    parts_[s - 1] = 0;
    parts_[i + 1] = last + 1;
    for (std::size_t j = i + 2; j < s; ++j) parts_[j] = 0;
    sync();
  }

  static std::vector<Vertex> all_vertices(const Graph& g) {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return all;
  }

private:
  Count total() const {
    std::uint64_t t = 0;
    for (Count c : parts_) t += c;
    return static_cast<Count>(t);
  }

  void sync() {
    for (std::size_t i = 0; i < support_.size(); ++i) current_.set(support_[i], parts_[i]);
  }

  Distribution current_;
  std::vector<Vertex> support_;
  std::vector<Count> parts_;
  bool done_ = false;
};

/// Calls fn(d) for every size-k distribution on `support` (all vertices if empty).
template <typename Fn>
void for_each_distribution(const Graph& g, Count k, const std::vector<Vertex>& support, Fn&& fn) {
  DistributionEnumerator it(g, k, support.empty() ? DistributionEnumerator::all_vertices(g) : support);
  for (; !it.done(); it.advance()) fn(it.current());
}

/// Convenience: materialises the enumeration.
inline std::vector<Distribution> enumerate_distributions(const Graph& g, Count k, const std::vector<Vertex>& support = {}) {
  std::vector<Distribution> out;
  for_each_distribution(g, k, support, [&](const Distribution& d) { out.push_back(d); });
  return out;
}

/// Uniform draw from the weak compositions of k into |V| parts (stars and bars).
template <typename Rng>
Distribution sample_distribution(const Graph& g, Count k, Rng& rng) {
  Distribution d(g);
  const std::uint64_t parts = g.vertex_count();
  const std::uint64_t slots = k + parts - 1;
  // Floyd's algorithm: choose parts-1 distinct bar positions among `slots`.
  std::set<std::uint64_t> bars;
  for (std::uint64_t j = slots - (parts - 1); j < slots; ++j) {
    std::uniform_int_distribution<std::uint64_t> pick(0, j);
    auto x = pick(rng);
    if (!bars.insert(x).second) bars.insert(j);
  }
  std::uint64_t prev = 0;
  Vertex v = 0;
  for (auto b : bars) {
    d.set(v++, static_cast<Count>(b - prev));
    prev = b + 1;
  }
  d.set(v, static_cast<Count>(slots - prev));
  return d;
}

inline Distribution sample_distribution(const Graph& g, Count k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_distribution(g, k, rng);
}

/// Parses "label=count,label=count". Omitted labels are zero; repeated labels
/// are rejected.
inline Distribution parse_distribution(const Graph& g, std::string_view text) {
  Distribution d(g);
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return d;
  while (true) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != '=' && text[pos] != ',') ++pos;
    auto name = text.substr(start, pos - start);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.remove_suffix(1);
    if (name.empty()) throw ParseError("expected a vertex label", start);
    if (pos >= text.size() || text[pos] != '=') throw ParseError("expected '=' after label", pos);
    auto v = g.find(name);
    if (!v) throw ParseError("unknown vertex label '" + std::string(name) + "'", start);
    if (seen[*v]) throw ParseError("vertex '" + std::string(name) + "' listed twice", start);
    seen[*v] = true;
    ++pos;
    skip_ws();
    Count value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos) throw ParseError("expected a pebble count", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    d.add(*v, value);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return d;
}

/// Inverse of parse_distribution: nonzero entries in vertex order.
inline std::string to_text(const Graph& g, const Distribution& d) {
  require_same_graph(g, d);
  std::string out;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (d[v] == 0) continue;
    if (!out.empty()) out += ',';
    out += g.label(v);
    out += '=';
    out += std::to_string(d[v]);
  }
  return out;
}

}  // namespace pebble
