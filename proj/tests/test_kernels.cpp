#include <random>
#include <vector>

#include "doctest.h"

#include "commgraph/bitset.hpp"
#include "commgraph/simd/kernels.hpp"

using namespace commgraph;

namespace {

struct Inputs {
  std::vector<std::uint32_t> a, b, idx;
  std::vector<std::uint64_t> wa, wb;
};

Inputs random_inputs(std::size_t n, std::mt19937& rng) {
  // Small value range so equal lanes are common.
  std::uniform_int_distribution<std::uint32_t> small(0, 3);
  std::uniform_int_distribution<std::uint32_t> at(0, n ? static_cast<std::uint32_t>(n - 1) : 0);
  std::uniform_int_distribution<std::uint64_t> word;
  Inputs in;
  for (std::size_t i = 0; i < n; ++i) {
    in.a.push_back(small(rng));
    in.b.push_back(small(rng));
    in.idx.push_back(at(rng));
  }
  for (std::size_t i = 0; i < simd::words_for(n) + 3; ++i) {
    in.wa.push_back(word(rng));
    in.wb.push_back(word(rng));
  }
  return in;
}

std::vector<std::uint64_t> mask(std::size_t n) { return std::vector<std::uint64_t>(simd::words_for(n), ~0ull); }

void expect_same(const simd::Kernels& ref, const simd::Kernels& k, std::size_t n, std::mt19937& rng) {
  auto in = random_inputs(n, rng);
  auto r = mask(n), o = mask(n);

  ref.equal_mask(in.a.data(), in.b.data(), n, r.data());
  k.equal_mask(in.a.data(), in.b.data(), n, o.data());
  CHECK(r == o);

  ref.equal_value_mask(in.a.data(), 2, n, r.data());
  k.equal_value_mask(in.a.data(), 2, n, o.data());
  CHECK(r == o);

  ref.gather_equal_mask(in.a.data(), in.b.data(), in.idx.data(), n, r.data());
  k.gather_equal_mask(in.a.data(), in.b.data(), in.idx.data(), n, o.data());
  CHECK(r == o);

  // lhs built to match outer[inner[k]] everywhere except one random position.
  std::vector<std::uint32_t> lhs(n);
  for (std::size_t i = 0; i < n; ++i) lhs[i] = in.a[in.idx[i]];
  CHECK(k.compose_mismatch(lhs.data(), in.a.data(), in.idx.data(), n) == n);
  if (n) {
    const std::size_t bad = rng() % n;
    lhs[bad] += 1;
    CHECK(ref.compose_mismatch(lhs.data(), in.a.data(), in.idx.data(), n) == bad);
    CHECK(k.compose_mismatch(lhs.data(), in.a.data(), in.idx.data(), n) == bad);
  }

  const std::size_t words = in.wa.size();
  CHECK(ref.popcount(in.wa.data(), words) == k.popcount(in.wa.data(), words));
  CHECK(ref.and_popcount(in.wa.data(), in.wb.data(), words) == k.and_popcount(in.wa.data(), in.wb.data(), words));

  auto d1 = in.wa, d2 = in.wa;
  ref.or_into(d1.data(), in.wb.data(), words);
  k.or_into(d2.data(), in.wb.data(), words);
  CHECK(d1 == d2);

  std::vector<std::uint64_t> e1(words), e2(words);
  CHECK(ref.and_not(e1.data(), in.wa.data(), in.wb.data(), words) ==
        k.and_not(e2.data(), in.wa.data(), in.wb.data(), words));
  CHECK(e1 == e2);
  CHECK_FALSE(k.and_not(e2.data(), in.wa.data(), in.wa.data(), words));
}

}  // namespace

TEST_CASE("scalar kernels: mask layout and tail bits") {
  const auto& k = simd::scalar_kernels();
  std::vector<std::uint32_t> a{1, 2, 3, 4, 5};
  std::vector<std::uint32_t> b{1, 0, 3, 0, 5};
  std::vector<std::uint64_t> out{~0ull};
  k.equal_mask(a.data(), b.data(), a.size(), out.data());
  CHECK(out[0] == 0b10101u);
  k.equal_value_mask(a.data(), 4, a.size(), out.data());
  CHECK(out[0] == 0b01000u);
}

TEST_CASE("active kernels are one of the known variants") {
  const auto name = simd::active().name;
  CHECK((name == "scalar" || name == "avx2"));
}

TEST_CASE("SIMD kernels agree with the scalar reference") {
  const simd::Kernels* avx2 = simd::avx2_kernels();
  if (!avx2) {
    MESSAGE("AVX2 not available; comparing scalar with itself");
    avx2 = &simd::scalar_kernels();
  }
  std::mt19937 rng(12345);
  for (std::size_t n : {0, 1, 7, 8, 9, 63, 64, 65, 127, 128, 129, 200, 1040}) {
    CAPTURE(n);
    for (int rep = 0; rep < 8; ++rep) expect_same(simd::scalar_kernels(), *avx2, n, rng);
  }
}

TEST_CASE("Bitset basics") {
  Bitset a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  CHECK(a.count() == 3);
  CHECK(a.count_and(b) == 1);
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.to_indices() == std::vector<std::uint32_t>{0, 64, 129});
  Bitset c = a;
  CHECK(c.subtract(b));
  CHECK(c.to_indices() == std::vector<std::uint32_t>{0, 129});
  c |= b;
  CHECK(c == a);
}
