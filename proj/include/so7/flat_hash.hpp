#pragma once

#include <atomic>
#include <cassert>
#include <cstdint>
#include <vector>

namespace so7 {

// Open-addressing hash containers specialised to the 28-bit element codes.
// Keys are raw SignedPerm codes (< 2^28), so 0xFFFFFFFF is a free sentinel.

inline constexpr uint32_t kSlotEmpty = 0xFFFFFFFFu;

inline uint32_t hash_code(uint32_t key) { return key * 2654435761u; }

// Growable set of element codes, linear probing, max load 1/2.
class FlatSet {
 public:
  explicit FlatSet(size_t expected = 64) { rehash(table_size_for(expected)); }

  bool insert(uint32_t key) {
    if (2 * (size_ + 1) > slots_.size()) rehash(2 * slots_.size());
    size_t i = hash_code(key) & mask_;
    while (true) {
      uint32_t cur = slots_[i];
      if (cur == key) return false;
      if (cur == kSlotEmpty) {
        slots_[i] = key;
        ++size_;
        return true;
      }
      i = (i + 1) & mask_;
    }
  }

  bool contains(uint32_t key) const {
    size_t i = hash_code(key) & mask_;
    while (true) {
      uint32_t cur = slots_[i];
      if (cur == key) return true;
      if (cur == kSlotEmpty) return false;
      i = (i + 1) & mask_;
    }
  }

  size_t size() const { return size_; }

 private:
  static size_t table_size_for(size_t expected) {
    size_t n = 64;
    while (n < 2 * expected) n *= 2;
    return n;
  }

  void rehash(size_t n) {
    std::vector<uint32_t> old = std::move(slots_);
    slots_.assign(n, kSlotEmpty);
    mask_ = n - 1;
    size_ = 0;
    for (uint32_t k : old)
      if (k != kSlotEmpty) insert(k);
  }

  std::vector<uint32_t> slots_;
  size_t mask_ = 0;
  size_t size_ = 0;
};

// Growable map from element code to a small integer (coset label, index).
class FlatMap {
 public:
  explicit FlatMap(size_t expected = 64) { rehash(table_size_for(expected)); }

  // Inserts key -> value if absent; returns the stored value either way.
  uint32_t insert_or_get(uint32_t key, uint32_t value) {
    if (2 * (size_ + 1) > keys_.size()) rehash(2 * keys_.size());
    size_t i = hash_code(key) & mask_;
    while (true) {
      uint32_t cur = keys_[i];
      if (cur == key) return vals_[i];
      if (cur == kSlotEmpty) {
        keys_[i] = key;
        vals_[i] = value;
        ++size_;
        return value;
      }
      i = (i + 1) & mask_;
    }
  }

  // Value for key; asserts presence.
  uint32_t at(uint32_t key) const {
    size_t i = hash_code(key) & mask_;
    while (true) {
      uint32_t cur = keys_[i];
      assert(cur != kSlotEmpty && "FlatMap::at missing key");
      if (cur == key) return vals_[i];
      i = (i + 1) & mask_;
    }
  }

  bool contains(uint32_t key) const {
    size_t i = hash_code(key) & mask_;
    while (true) {
      uint32_t cur = keys_[i];
      if (cur == key) return true;
      if (cur == kSlotEmpty) return false;
      i = (i + 1) & mask_;
    }
  }

  size_t size() const { return size_; }

 private:
  static size_t table_size_for(size_t expected) {
    size_t n = 64;
    while (n < 2 * expected) n *= 2;
    return n;
  }

  void rehash(size_t n) {
    std::vector<uint32_t> ok = std::move(keys_), ov = std::move(vals_);
    keys_.assign(n, kSlotEmpty);
    vals_.assign(n, 0);
    mask_ = n - 1;
    size_ = 0;
    for (size_t i = 0; i < ok.size(); ++i)
      if (ok[i] != kSlotEmpty) insert_or_get(ok[i], ov[i]);
  }

  std::vector<uint32_t> keys_, vals_;
  size_t mask_ = 0;
  size_t size_ = 0;
};

// Fixed-capacity concurrent set for the parallel closure kernel.  Slots are
// claimed with compare-exchange; no growth, so the caller must size it for
// the largest possible group (capacity is a hard bound, insert asserts).
class ConcurrentSet {
 public:
  explicit ConcurrentSet(size_t expected) {
    size_t n = 64;
    while (n < 2 * expected) n *= 2;
    slots_ = std::vector<std::atomic<uint32_t>>(n);
    for (auto& s : slots_) s.store(kSlotEmpty, std::memory_order_relaxed);
    mask_ = n - 1;
  }

  // True if this call inserted the key.
  bool insert(uint32_t key) {
    size_t i = hash_code(key) & mask_;
    while (true) {
      uint32_t cur = slots_[i].load(std::memory_order_relaxed);
      if (cur == key) return false;
      if (cur == kSlotEmpty) {
        if (slots_[i].compare_exchange_strong(cur, key,
                                              std::memory_order_relaxed)) {
          size_.fetch_add(1, std::memory_order_relaxed);
          assert(2 * size_.load(std::memory_order_relaxed) <= slots_.size());
          return true;
        }
        if (cur == key) return false;  // lost the race to the same key
      }
      i = (i + 1) & mask_;
    }
  }

  size_t size() const { return size_.load(std::memory_order_relaxed); }

 private:
  std::vector<std::atomic<uint32_t>> slots_;
  size_t mask_ = 0;
  std::atomic<size_t> size_{0};
};

}  // namespace so7
