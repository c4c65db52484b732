// Compiled with -mavx2 -mpopcnt; only reached through avx2_kernels() after a
// runtime CPU check.

#include "commgraph/simd/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

#include <bit>

namespace commgraph::simd {
namespace {

inline std::uint64_t movemask8(__m256i eq) {
  return static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
}

inline __m256i load8(const std::uint32_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

inline __m256i gather8(const std::uint32_t* base, __m256i idx) {
  return _mm256_i32gather_epi32(reinterpret_cast<const int*>(base), idx, 4);
}

// Fills the full 64-bit words with the vector loop, then finishes the tail
// word with the scalar predicate.
template <typename Block, typename Pred>
void build_mask(std::size_t n, std::uint64_t* out, Block block, Pred pred) {
  const std::size_t full = n / kWordBits;
  for (std::size_t w = 0; w < full; ++w) {
    const std::size_t base = w * kWordBits;
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < kWordBits; j += 8) bits |= block(base + j) << j;
    out[w] = bits;
  }
  const std::size_t base = full * kWordBits;
  if (base < n) {
    std::uint64_t bits = 0;
    std::size_t i = base;
    for (; i + 8 <= n; i += 8) bits |= block(i) << (i - base);
    for (; i < n; ++i) bits |= static_cast<std::uint64_t>(pred(i)) << (i - base);
    out[full] = bits;
  }
}

void equal_mask(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint64_t* out) {
  build_mask(
      n, out, [&](std::size_t i) { return movemask8(_mm256_cmpeq_epi32(load8(a + i), load8(b + i))); },
      [&](std::size_t i) { return a[i] == b[i]; });
}

void equal_value_mask(const std::uint32_t* a, std::uint32_t value, std::size_t n, std::uint64_t* out) {
  const __m256i v = _mm256_set1_epi32(static_cast<int>(value));
  build_mask(
      n, out, [&](std::size_t i) { return movemask8(_mm256_cmpeq_epi32(load8(a + i), v)); },
      [&](std::size_t i) { return a[i] == value; });
}

void gather_equal_mask(const std::uint32_t* row, const std::uint32_t* col, const std::uint32_t* idx, std::size_t n,
                       std::uint64_t* out) {
  build_mask(
      n, out,
      [&](std::size_t i) {
        const __m256i at = load8(idx + i);
        return movemask8(_mm256_cmpeq_epi32(gather8(row, at), gather8(col, at)));
      },
      [&](std::size_t i) { return row[idx[i]] == col[idx[i]]; });
}

std::size_t compose_mismatch(const std::uint32_t* lhs, const std::uint32_t* outer, const std::uint32_t* inner,
                             std::size_t n) {
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256i eq = _mm256_cmpeq_epi32(load8(lhs + k), gather8(outer, load8(inner + k)));
    const auto mask = static_cast<unsigned>(movemask8(eq));
    if (mask != 0xFFu) return k + static_cast<std::size_t>(std::countr_one(mask));
  }
  for (; k < n; ++k) {
    if (lhs[k] != outer[inner[k]]) return k;
  }
  return n;
}

// Nibble lookup popcount; partial byte sums are folded with SAD every block.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                       2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

inline std::size_t horizontal_sum(__m256i acc) {
  return static_cast<std::size_t>(_mm256_extract_epi64(acc, 0)) + static_cast<std::size_t>(_mm256_extract_epi64(acc, 1)) +
         static_cast<std::size_t>(_mm256_extract_epi64(acc, 2)) + static_cast<std::size_t>(_mm256_extract_epi64(acc, 3));
}

inline __m256i loadw(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

std::size_t popcount(const std::uint64_t* w, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(loadw(w + i)), _mm256_setzero_si256()));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(w[i]));
  return total;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = _mm256_and_si256(loadw(a + i), loadw(b + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(loadw(dst + i), loadw(src + i)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

bool and_not(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  __m256i any = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = _mm256_andnot_si256(loadw(b + i), loadw(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    any = _mm256_or_si256(any, v);
  }
  bool nonzero = !_mm256_testz_si256(any, any);
  for (; i < words; ++i) {
    dst[i] = a[i] & ~b[i];
    nonzero = nonzero || dst[i] != 0;
  }
  return nonzero;
}

}  // namespace

const Kernels* avx2_kernels_unchecked() {
  static const Kernels k{"avx2",    &equal_mask,   &equal_value_mask, &gather_equal_mask, &compose_mismatch,
                         &popcount, &and_popcount, &or_into,          &and_not};
  return &k;
}

}  // namespace commgraph::simd

#else

namespace commgraph::simd {
const Kernels* avx2_kernels_unchecked() { return nullptr; }
}  // namespace commgraph::simd

#endif
