#include "commgraph/simd/kernels.hpp"

#include <bit>

namespace commgraph::simd {
namespace {

template <typename Pred>
void build_mask(std::size_t n, std::uint64_t* out, Pred pred) {
  const std::size_t words = words_for(n);
  for (std::size_t w = 0; w < words; ++w) {
    const std::size_t base = w * kWordBits;
    const std::size_t end = base + kWordBits < n ? base + kWordBits : n;
    std::uint64_t bits = 0;
    for (std::size_t i = base; i < end; ++i) {
      bits |= static_cast<std::uint64_t>(pred(i)) << (i - base);
    }
    out[w] = bits;
  }
}

void equal_mask(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint64_t* out) {
  build_mask(n, out, [&](std::size_t i) { return a[i] == b[i]; });
}

void equal_value_mask(const std::uint32_t* a, std::uint32_t value, std::size_t n, std::uint64_t* out) {
  build_mask(n, out, [&](std::size_t i) { return a[i] == value; });
}

void gather_equal_mask(const std::uint32_t* row, const std::uint32_t* col, const std::uint32_t* idx, std::size_t n,
                       std::uint64_t* out) {
  build_mask(n, out, [&](std::size_t i) { return row[idx[i]] == col[idx[i]]; });
}

std::size_t compose_mismatch(const std::uint32_t* lhs, const std::uint32_t* outer, const std::uint32_t* inner,
                             std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (lhs[k] != outer[inner[k]]) return k;
  }
  return n;
}

std::size_t popcount(const std::uint64_t* w, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(w[i]));
  return total;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

bool and_not(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t any = 0;
  for (std::size_t i = 0; i < words; ++i) {
    dst[i] = a[i] & ~b[i];
    any |= dst[i];
  }
  return any != 0;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar",        &equal_mask, &equal_value_mask, &gather_equal_mask, &compose_mismatch,
                         &popcount,       &and_popcount, &or_into,        &and_not};
  return k;
}

}  // namespace commgraph::simd
