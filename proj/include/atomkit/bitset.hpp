#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "atomkit/simd/kernels.hpp"

namespace atomkit {

// Fixed-width dynamic bitset. Short sets (the common case at sweep scale) are
// handled with inline word loops; wide sets go through the dispatched kernels.
class Bitset {
 public:
  using Word = simd::Word;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kKernelThreshold = 8;

  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t bit_count() const noexcept { return nbits_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void set_all() noexcept {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }

  std::size_t count() const noexcept {
    if (words_.size() >= kKernelThreshold) return simd::active().popcount(words_);
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool none() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) noexcept {
    if (words_.size() >= kKernelThreshold) {
      simd::active().or_assign(words_, o.words_);
    } else {
      for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }
    return *this;
  }
  Bitset& operator&=(const Bitset& o) noexcept {
    if (words_.size() >= kKernelThreshold) {
      simd::active().and_assign(words_, o.words_);
    } else {
      for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }
    return *this;
  }
  // Set difference.
  Bitset& operator-=(const Bitset& o) noexcept {
    if (words_.size() >= kKernelThreshold) {
      simd::active().andnot_assign(words_, o.words_);
    } else {
      for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }
    return *this;
  }

  bool intersects(const Bitset& o) const noexcept {
    if (words_.size() >= kKernelThreshold) return simd::active().intersects(words_, o.words_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const noexcept {
    if (words_.size() >= kKernelThreshold) return simd::active().is_subset(words_, o.words_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Index of the lowest set bit, or bit_count() if empty.
  std::size_t find_first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return nbits_;
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        f(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  // Three-way comparison of the sets read as unsigned integers (bit i has
  // weight 2^i).
  static int compare_value(const Bitset& a, const Bitset& b) noexcept {
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i] ? -1 : 1;
    }
    return 0;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Word w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return h;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

 private:
  void trim() noexcept {
    const std::size_t rem = nbits_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

}  // namespace atomkit
