#pragma once

// Concrete finite groups stored as Cayley tables, and the subgroup
// computations the rest of the library is built on.
//
// Elements are indices 0..order-1 with the identity at 0. All set-valued
// results are sorted ascending.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commgraph/bitset.hpp"

namespace commgraph {

using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;
inline constexpr std::size_t kDefaultOrderCap = 4096;

// COMMGRAPH_ORDER_CAP when set to a positive integer, kDefaultOrderCap otherwise.
std::size_t default_order_cap();

// First reason a K*K table is not a group with identity 0.
struct TableDefect {
  enum class Kind { OutOfRange, IdentityNotZero, NoIdentity, RowNotPermutation, ColumnNotPermutation, NotAssociative };
  Kind kind;
  // (g, h, k) for NotAssociative; (g, h) cell for OutOfRange; row/column index otherwise.
  std::vector<Element> where;
  std::string describe() const;
};

std::optional<TableDefect> find_table_defect(std::size_t order, std::span<const Element> table);

// Lexicographically first (g, h, k) with (gh)k != g(hk), scanning every triple.
std::optional<TableDefect> first_associativity_failure(std::size_t order, std::span<const Element> table);

class FiniteGroup {
 public:
  // Validates the full group axioms; throws Error(NotAGroup | IdentityNotZero | OrderCapExceeded).
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::vector<std::string> labels = {}, std::size_t order_cap = default_order_cap());

  std::size_t order() const { return order_; }

  Element mul(Element g, Element h) const { return table_[static_cast<std::size_t>(g) * order_ + h]; }
  Element inv(Element g) const { return inverse_[g]; }

  // row(g)[h] = g*h, column(g)[h] = h*g.
  std::span<const Element> row(Element g) const {
    return {table_.data() + static_cast<std::size_t>(g) * order_, order_};
  }
  std::span<const Element> column(Element g) const {
    return {transposed_.data() + static_cast<std::size_t>(g) * order_, order_};
  }
  std::span<const Element> table() const { return table_; }

  // Throws Error(IndexOutOfRange) unless g < order().
  void check(Element g) const;

  bool has_labels() const { return !labels_.empty(); }
  // Builder-provided name (e.g. "a^2 x^3") or the decimal index.
  std::string label(Element g) const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> transposed_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

class Subgroup {
 public:
  // Checks that elements form a subgroup of parent; throws Error(InvalidArgument) otherwise.
  static Subgroup from_elements(const FiniteGroup& parent, std::vector<Element> elements);

  // Trusted construction from a membership mask that is already known to be closed.
  static Subgroup from_mask_unchecked(const FiniteGroup& parent, Bitset mask);

  const FiniteGroup& parent() const { return *parent_; }
  std::span<const Element> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element g) const { return g < mask_.size() && mask_.test(g); }
  const Bitset& mask() const { return mask_; }

  bool is_subset_of(const Subgroup& other) const { return mask_.is_subset_of(other.mask_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup(const FiniteGroup& parent, Bitset mask);

  const FiniteGroup* parent_ = nullptr;
  std::vector<Element> elements_;
  Bitset mask_;
};

// g^h = h^-1 g h
Element conjugate(const FiniteGroup& G, Element g, Element h);
// [g, h] = g^-1 h^-1 g h
Element commutator(const FiniteGroup& G, Element g, Element h);
// g^l for any integer l; negative exponents go through the inverse.
Element power(const FiniteGroup& G, Element g, long long l);
std::size_t element_order(const FiniteGroup& G, Element g);

Subgroup whole_group(const FiniteGroup& G);
Subgroup trivial_subgroup(const FiniteGroup& G);

// Membership mask of C_G(g), computed with one SIMD row/column comparison.
Bitset centralizer_mask(const FiniteGroup& G, Element g);
// Masks for every element, indexed by element.
std::vector<Bitset> all_centralizer_masks(const FiniteGroup& G);

Subgroup center(const FiniteGroup& G);
Subgroup centralizer(const FiniteGroup& G, Element g);
Subgroup derived_subgroup(const FiniteGroup& G);

// Smallest subgroup containing gens, discovered breadth-first with
// generators applied in ascending index order.
Subgroup closure(const FiniteGroup& G, std::span<const Element> gens);
Subgroup cyclic_subgroup(const FiniteGroup& G, Element g);

Subgroup intersection(const Subgroup& H, const Subgroup& K);
// <H, K>
Subgroup join(const Subgroup& H, const Subgroup& K);

bool is_abelian(const Subgroup& H);
bool is_cyclic(const Subgroup& H);
bool is_normal(const FiniteGroup& G, const Subgroup& H);

// {a * u : a in A, u in N}, sorted.
std::vector<Element> product_set(const Subgroup& A, const Subgroup& N);

}  // namespace commgraph
