#pragma once

// Data-parallel inner loops shared by the group and graph code.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2 variant. The variant used at runtime is chosen once by active():
// AVX2 when the CPU reports it, scalar otherwise. Setting the environment
// variable COMMGRAPH_SIMD=scalar forces the reference path.
//
// Bit masks are little-endian arrays of 64-bit words: bit i lives in word
// i / 64 at position i % 64. Kernels that produce a mask write every word
// they cover and leave the bits past n cleared.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace commgraph::simd {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

struct Kernels {
  std::string_view name;

  // out bit i = (a[i] == b[i]) for i < n.
  void (*equal_mask)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint64_t* out);

  // out bit i = (a[i] == value) for i < n.
  void (*equal_value_mask)(const std::uint32_t* a, std::uint32_t value, std::size_t n, std::uint64_t* out);

  // out bit i = (row[idx[i]] == col[idx[i]]) for i < n.
  void (*gather_equal_mask)(const std::uint32_t* row, const std::uint32_t* col, const std::uint32_t* idx,
                            std::size_t n, std::uint64_t* out);

  // Smallest k < n with lhs[k] != outer[inner[k]], or n when none.
  std::size_t (*compose_mismatch)(const std::uint32_t* lhs, const std::uint32_t* outer, const std::uint32_t* inner,
                                  std::size_t n);

  std::size_t (*popcount)(const std::uint64_t* w, std::size_t words);
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

  // dst |= src
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

  // dst = a & ~b; returns whether any bit of dst is set. dst may alias a.
  bool (*and_not)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

const Kernels& scalar_kernels();

// nullptr when the AVX2 translation unit was not built or the CPU lacks AVX2.
const Kernels* avx2_kernels();

const Kernels& active();

}  // namespace commgraph::simd
