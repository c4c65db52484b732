#pragma once

// Ways to obtain a FiniteGroup: metacyclic presentations, permutation
// generators, and the plain-text Cayley table format.
//
// Cayley file format:
//   # optional comment lines
//   commgraph-cayley 1
//   order K
//   K lines of K base-10 indices; row g, column h holds g*h. Identity is 0.
//
// Permutation file format:
//   # optional comment lines
//   commgraph-perms 1
//   degree D
//   one generator per line: the D images of 0..D-1

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph {

// <a, x | a^m = x^s, x^n = 1, x^a = x^t>, elements a^i x^j at index i*n + j.
struct MetacyclicParams {
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t s = 0;
  std::size_t t = 1;

  friend bool operator==(const MetacyclicParams&, const MetacyclicParams&) = default;
};

// Empty string when (m, n, s, t) defines a group of order m*n; otherwise the
// first violated condition (t^m = 1 and s(t-1) = 0 mod n, plus the ranges).
std::string metacyclic_inconsistency(const MetacyclicParams& p);

std::size_t index_of(const MetacyclicParams& p, std::size_t i, std::size_t j);

FiniteGroup build_metacyclic(const MetacyclicParams& p, std::size_t order_cap = default_order_cap());

// Order 4k: <a, x | a^2 = x^{2k} = 1, x^a = x^-1>, k >= 2.
FiniteGroup build_dihedral(std::size_t halfturn, std::size_t order_cap = default_order_cap());

// <a, x | a^m = x^n = 1, x^a = x^2> with n >= 9 an odd multiple of 3 and 2^m = 1 mod n.
FiniteGroup build_example2(std::size_t n, std::size_t m, std::size_t order_cap = default_order_cap());

using Permutation = std::vector<std::uint32_t>;

struct PermGenSet {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

struct PermutationGroup {
  FiniteGroup group;
  // elements[g] is the permutation labelled g; elements[0] is the identity.
  std::vector<Permutation> elements;
};

// Breadth-first enumeration: identity first, then elements in discovery
// order, each dequeued element multiplied by the generators in list order.
// Products act left to right: (p*q)(i) = q(p(i)).
PermutationGroup close_permutations(const PermGenSet& gens, std::size_t order_cap = default_order_cap());

void write_cayley(const FiniteGroup& G, std::ostream& out);
FiniteGroup parse_cayley(std::istream& in, std::size_t order_cap = default_order_cap());
void write_cayley_file(const FiniteGroup& G, const std::filesystem::path& path);
FiniteGroup read_cayley_file(const std::filesystem::path& path, std::size_t order_cap = default_order_cap());

void write_perms(const PermGenSet& gens, std::ostream& out);
PermGenSet parse_perms(std::istream& in);
PermGenSet read_perms_file(const std::filesystem::path& path);

}  // namespace commgraph
