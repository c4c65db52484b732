#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "commgraph/simd/kernels.hpp"

namespace commgraph {

// Fixed-size dense bit set; set operations go through the active SIMD kernels.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_(simd::words_for(size), 0) {}

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }

  bool test(std::size_t i) const { return (words_[i / simd::kWordBits] >> (i % simd::kWordBits)) & 1u; }
  void set(std::size_t i) { words_[i / simd::kWordBits] |= std::uint64_t{1} << (i % simd::kWordBits); }
  void reset(std::size_t i) { words_[i / simd::kWordBits] &= ~(std::uint64_t{1} << (i % simd::kWordBits)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const { return simd::active().popcount(words_.data(), words_.size()); }
  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  std::size_t count_and(const Bitset& other) const {
    return simd::active().and_popcount(words_.data(), other.words_.data(), words_.size());
  }
  Bitset& operator|=(const Bitset& other) {
    simd::active().or_into(words_.data(), other.words_.data(), words_.size());
    return *this;
  }
  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  // this = this & ~other; returns whether anything is left.
  bool subtract(const Bitset& other) {
    return simd::active().and_not(words_.data(), words_.data(), other.words_.data(), words_.size());
  }
  bool is_subset_of(const Bitset& other) const { return count_and(other) == count(); }

  // Calls f(i) for every set bit in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * simd::kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace commgraph
