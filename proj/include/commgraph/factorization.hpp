#pragma once

// Witnesses for G = A N with N cyclic and normal, A abelian.

#include <optional>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph {

struct Factorization {
  Element n_gen = kIdentity;        // generates N
  std::vector<Element> a_gens;      // sorted; generate A

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline constexpr std::size_t kDefaultMaxAGens = 2;

bool verify_factorization(const FiniteGroup& G, const Factorization& f);

struct NormalCyclic {
  Element generator;  // least index generating the subgroup
  Subgroup subgroup;
};

// Every normal cyclic subgroup once, by descending size then generator index.
std::vector<NormalCyclic> all_normal_cyclic_subgroups(const FiniteGroup& G);

// Bounded deterministic search. For each normal cyclic N (largest first) it
// tries generator sets for A of size 1, 2, ..., max_a_gens in lexicographic
// index order and returns the first with A abelian and A N = G. An empty
// result means "not found within the bound", not "does not exist".
std::optional<Factorization> find_factorization(const FiniteGroup& G, std::size_t max_a_gens = kDefaultMaxAGens);

}  // namespace commgraph
