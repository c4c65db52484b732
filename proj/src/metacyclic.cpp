#include <string>

#include "commgraph/error.hpp"
#include "commgraph/ingest.hpp"

namespace commgraph {
namespace {

std::size_t mulmod(std::size_t a, std::size_t b, std::size_t n) { return (a * b) % n; }

std::string word_label(std::size_t i, std::size_t j) {
  auto part = [](const char* sym, std::size_t e) {
    return e == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(e);
  };
  if (i == 0 && j == 0) return "1";
  if (i == 0) return part("x", j);
  if (j == 0) return part("a", i);
  return part("a", i) + " " + part("x", j);
}

}  // namespace

std::string metacyclic_inconsistency(const MetacyclicParams& p) {
  if (p.m == 0) return "m must be positive";
  if (p.n == 0) return "n must be positive";
  if (p.s >= p.n) return "s must lie in [0, n)";
  // For n = 1 every residue is 0, so t = 0 and t = 1 both describe the trivial action.
  if (p.n == 1 ? p.t > 1 : (p.t == 0 || p.t >= p.n)) return "t must lie in [1, n)";
  std::size_t tm = 1 % p.n;
  for (std::size_t k = 0; k < p.m; ++k) tm = mulmod(tm, p.t, p.n);
  if (tm != 1 % p.n) return "t^m != 1 (mod n)";
  if (mulmod(p.s, (p.t + p.n - 1) % p.n, p.n) != 0) return "s(t - 1) != 0 (mod n)";
  return {};
}

std::size_t index_of(const MetacyclicParams& p, std::size_t i, std::size_t j) { return i * p.n + j; }

FiniteGroup build_metacyclic(const MetacyclicParams& p, std::size_t order_cap) {
  if (auto why = metacyclic_inconsistency(p); !why.empty()) {
    throw Error(ErrorKind::InconsistentPresentation,
                "(m, n, s, t) = (" + std::to_string(p.m) + ", " + std::to_string(p.n) + ", " + std::to_string(p.s) +
                    ", " + std::to_string(p.t) + "): " + why);
  }
  const std::size_t order = p.m * p.n;
  if (order > order_cap) {
    throw Error(ErrorKind::OrderCapExceeded,
                "order " + std::to_string(order) + " exceeds cap " + std::to_string(order_cap));
  }

  // t^k mod n for 0 <= k < m
  std::vector<std::size_t> tpow(p.m);
  tpow[0] = 1 % p.n;
  for (std::size_t k = 1; k < p.m; ++k) tpow[k] = mulmod(tpow[k - 1], p.t, p.n);

  // (a^i x^j)(a^k x^l) = a^{i+k} x^{j t^k + l}, and a^m = x^s is central in <x>.
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < p.m; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) {
      const std::size_t row = index_of(p, i, j) * order;
      for (std::size_t k = 0; k < p.m; ++k) {
        const std::size_t shifted = mulmod(j, tpow[k], p.n);
        std::size_t ai = i + k;
        std::size_t carry = 0;
        if (ai >= p.m) {
          ai -= p.m;
          carry = p.s;
        }
        for (std::size_t l = 0; l < p.n; ++l) {
          table[row + index_of(p, k, l)] = static_cast<Element>(index_of(p, ai, (shifted + l + carry) % p.n));
        }
      }
    }
  }

  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < p.m; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) labels[index_of(p, i, j)] = word_label(i, j);
  }
  return FiniteGroup::from_table(order, std::move(table), std::move(labels), order_cap);
}

FiniteGroup build_dihedral(std::size_t halfturn, std::size_t order_cap) {
  if (halfturn < 2) throw Error(ErrorKind::ConstraintViolated, "dihedral builder needs halfturn >= 2");
  return build_metacyclic({2, 2 * halfturn, 0, 2 * halfturn - 1}, order_cap);
}

FiniteGroup build_example2(std::size_t n, std::size_t m, std::size_t order_cap) {
  if (n < 9) throw Error(ErrorKind::ConstraintViolated, "n >= 9 required, got n = " + std::to_string(n));
  if (n % 2 == 0) throw Error(ErrorKind::ConstraintViolated, "n must be odd, got n = " + std::to_string(n));
  if (n % 3 != 0) throw Error(ErrorKind::ConstraintViolated, "n must be a multiple of 3, got n = " + std::to_string(n));
  if (m == 0) throw Error(ErrorKind::ConstraintViolated, "m must be positive");
  std::size_t two_m = 1;
  for (std::size_t k = 0; k < m; ++k) two_m = mulmod(two_m, 2, n);
  if (two_m != 1) {
    throw Error(ErrorKind::ConstraintViolated, "2^m != 1 (mod n) for (n, m) = (" + std::to_string(n) + ", " +
                                                   std::to_string(m) + "): 2^m = " + std::to_string(two_m));
  }
  return build_metacyclic({m, n, 0, 2}, order_cap);
}

}  // namespace commgraph
