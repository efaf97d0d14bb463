#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

namespace pebble {

inline std::uint64_t hash_bytes(std::span<const std::uint8_t> key) noexcept {
  constexpr std::uint64_t kMul = 0x9E3779B97F4A7C15ULL;
  std::uint64_t h = 0xcbf29ce484222325ULL ^ key.size();
  std::size_t i = 0;
  for (; i + 8 <= key.size(); i += 8) {
    std::uint64_t w;
    std::memcpy(&w, key.data() + i, 8);
    h = (h ^ w) * kMul;
    h ^= h >> 29;
  }
  std::uint64_t tail = 0;
  for (std::size_t s = 0; i < key.size(); ++i, s += 8) tail |= std::uint64_t{key[i]} << s;
  h = (h ^ tail) * kMul;
  h ^= h >> 32;
  h *= 0xD6E8FEB86659FD93ULL;
  h ^= h >> 32;
  return h;
}

/// Open-addressing set of fixed-width byte strings. Keys live contiguously in
/// an arena; each slot packs 32 bits of hash with a 32-bit arena index.
class StateTable {
public:
  explicit StateTable(std::size_t key_bytes = 0) { reset(key_bytes); }

  void reset(std::size_t key_bytes) {
    key_bytes_ = key_bytes;
    arena_.clear();
    arena_.shrink_to_fit();
    slots_.assign(kInitialSlots, 0);
    size_ = 0;
  }

  void clear() { reset(key_bytes_); }

  std::size_t key_bytes() const noexcept { return key_bytes_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t memory_bytes() const noexcept { return arena_.capacity() + slots_.capacity() * sizeof(std::uint64_t); }

  bool contains(std::span<const std::uint8_t> key, std::uint64_t hash) const noexcept {
    const std::uint64_t mask = slots_.size() - 1;
    const std::uint64_t tag = hash >> 32;
    for (std::uint64_t i = hash & mask;; i = (i + 1) & mask) {
      const std::uint64_t slot = slots_[i];
      if (slot == 0) return false;
      if ((slot >> 32) == tag && equal(static_cast<std::uint32_t>(slot) - 1, key)) return true;
    }
  }

  bool contains(std::span<const std::uint8_t> key) const noexcept { return contains(key, hash_bytes(key)); }

  /// Returns false if the key was already present.
  bool insert(std::span<const std::uint8_t> key, std::uint64_t hash) {
    if ((size_ + 1) * 2 > slots_.size()) grow();
    if (!place(key, hash)) return false;
    ++size_;
    return true;
  }

  bool insert(std::span<const std::uint8_t> key) { return insert(key, hash_bytes(key)); }

private:
  static constexpr std::size_t kInitialSlots = 1024;

  bool equal(std::uint32_t index, std::span<const std::uint8_t> key) const noexcept {
    return std::memcmp(arena_.data() + std::size_t{index} * key_bytes_, key.data(), key_bytes_) == 0;
  }

  bool place(std::span<const std::uint8_t> key, std::uint64_t hash) {
    const std::uint64_t mask = slots_.size() - 1;
    const std::uint64_t tag = hash >> 32;
    for (std::uint64_t i = hash & mask;; i = (i + 1) & mask) {
      const std::uint64_t slot = slots_[i];
      if (slot == 0) {
        const auto index = static_cast<std::uint32_t>(arena_.size() / (key_bytes_ ? key_bytes_ : 1));
        arena_.insert(arena_.end(), key.begin(), key.end());
        slots_[i] = (tag << 32) | (std::uint64_t{index} + 1);
        return true;
      }
      if ((slot >> 32) == tag && equal(static_cast<std::uint32_t>(slot) - 1, key)) return false;
    }
  }

  void grow() {
    std::vector<std::uint64_t> old(slots_.size() * 2, 0);
    old.swap(slots_);
    const std::uint64_t mask = slots_.size() - 1;
    for (std::uint64_t slot : old) {
      if (slot == 0) continue;
      const auto index = static_cast<std::uint32_t>(slot) - 1;
      std::span<const std::uint8_t> key(arena_.data() + std::size_t{index} * key_bytes_, key_bytes_);
      // the stored tag is only the high half of the hash, so recompute
      const std::uint64_t hash = hash_bytes(key);
      std::uint64_t i = hash & mask;
      while (slots_[i] != 0) i = (i + 1) & mask;
      slots_[i] = slot;
    }
  }

  std::size_t key_bytes_ = 0;
  std::vector<std::uint8_t> arena_;
  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
};

}  // namespace pebble
