#include "commgraph/factorization.hpp"

#include <algorithm>
#include <map>

namespace commgraph {
namespace {

// coset[g] = index of gN among the cosets of N, numbered by least element.
std::vector<std::uint32_t> coset_labels(const FiniteGroup& G, const Subgroup& N, std::size_t& count) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> coset(G.order(), kUnset);
  count = 0;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (coset[g] != kUnset) continue;
    for (Element u : N.elements()) coset[G.mul(static_cast<Element>(g), u)] = static_cast<std::uint32_t>(count);
    ++count;
  }
  return coset;
}

bool covers_all_cosets(const Subgroup& A, const std::vector<std::uint32_t>& coset, std::size_t count) {
  std::vector<std::uint8_t> hit(count);
  std::size_t reached = 0;
  for (Element a : A.elements()) {
    auto& h = hit[coset[a]];
    if (!h) {
      h = 1;
      ++reached;
    }
  }
  return reached == count;
}

// Visits k-subsets of {0..n-1} in lexicographic order until f returns true.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<Element> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Element>(i);
  for (;;) {
    if (f(std::span<const Element>(pick))) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

bool verify_factorization(const FiniteGroup& G, const Factorization& f) {
  G.check(f.n_gen);
  for (Element a : f.a_gens) G.check(a);
  const Subgroup N = cyclic_subgroup(G, f.n_gen);
  const Subgroup A = closure(G, f.a_gens);
  return is_normal(G, N) && is_abelian(A) && product_set(A, N).size() == G.order();
}

std::vector<NormalCyclic> all_normal_cyclic_subgroups(const FiniteGroup& G) {
  std::map<std::vector<Element>, bool> seen;
  std::vector<NormalCyclic> out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    Subgroup H = cyclic_subgroup(G, static_cast<Element>(g));
    std::vector<Element> key(H.elements().begin(), H.elements().end());
    if (!seen.emplace(std::move(key), true).second) continue;
    if (is_normal(G, H)) out.push_back({static_cast<Element>(g), std::move(H)});
  }
  std::stable_sort(out.begin(), out.end(), [](const NormalCyclic& a, const NormalCyclic& b) {
    return a.subgroup.size() != b.subgroup.size() ? a.subgroup.size() > b.subgroup.size()
                                                  : a.generator < b.generator;
  });
  return out;
}

std::optional<Factorization> find_factorization(const FiniteGroup& G, std::size_t max_a_gens) {
  const Subgroup derived = derived_subgroup(G);
  const auto centralizers = all_centralizer_masks(G);
  for (const auto& [n_gen, N] : all_normal_cyclic_subgroups(G)) {
    // A N = G with A abelian makes G/N abelian, so N must contain G'.
    if (!derived.is_subset_of(N)) continue;
    std::size_t cosets = 0;
    const auto coset = coset_labels(G, N, cosets);
    for (std::size_t k = 1; k <= max_a_gens; ++k) {
      std::optional<Factorization> found;
      for_each_subset(G.order(), k, [&](std::span<const Element> gens) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
          for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!centralizers[gens[i]].test(gens[j])) return false;
          }
        }
        const Subgroup A = closure(G, gens);
        if (!covers_all_cosets(A, coset, cosets)) return false;
        found = Factorization{n_gen, std::vector<Element>(gens.begin(), gens.end())};
        return true;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

}  // namespace commgraph
