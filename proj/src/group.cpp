#include "commgraph/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <string_view>

#include "commgraph/error.hpp"

namespace commgraph {

std::size_t default_order_cap() {
  if (const char* env = std::getenv("COMMGRAPH_ORDER_CAP")) {
    std::string_view text(env);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return kDefaultOrderCap;
}

// ---------------------------------------------------------------------------
// Table validation

std::string TableDefect::describe() const {
  auto list = [this] {
    std::string s;
    for (std::size_t i = 0; i < where.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(where[i]);
    }
    return s;
  };
  switch (kind) {
    case Kind::OutOfRange: return "entry at (" + list() + ") is out of range";
    case Kind::IdentityNotZero: return "element " + list() + " is the identity but index 0 is not";
    case Kind::NoIdentity: return "no two-sided identity element";
    case Kind::RowNotPermutation: return "row " + list() + " is not a permutation";
    case Kind::ColumnNotPermutation: return "column " + list() + " is not a permutation";
    case Kind::NotAssociative: return "(g h) k != g (h k) for (g, h, k) = (" + list() + ")";
  }
  return "unknown defect";
}

namespace {

std::span<const Element> table_row(std::span<const Element> table, std::size_t order, std::size_t g) {
  return table.subspan(g * order, order);
}

bool acts_as_identity(std::span<const Element> table, std::size_t order, std::size_t e) {
  for (std::size_t g = 0; g < order; ++g) {
    if (table[e * order + g] != g || table[g * order + e] != g) return false;
  }
  return true;
}

// Generators whose right-multiplication closure from {0} reaches every element.
std::vector<Element> spanning_generators(std::span<const Element> table, std::size_t order) {
  std::vector<Element> gens;
  Bitset reached(order);
  reached.set(0);
  std::deque<Element> queue;
  std::vector<Element> seen{0};
  for (;;) {
    std::size_t missing = order;
    for (std::size_t e = 0; e < order; ++e) {
      if (!reached.test(e)) {
        missing = e;
        break;
      }
    }
    if (missing == order) return gens;
    gens.push_back(static_cast<Element>(missing));
    // Re-expand everything found so far by the new generator, then continue
    // the closure with the full generator list.
    queue.assign(seen.begin(), seen.end());
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      for (Element s : gens) {
        const Element y = table[static_cast<std::size_t>(x) * order + s];
        if (!reached.test(y)) {
          reached.set(y);
          seen.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }
}

}  // namespace

std::optional<TableDefect> first_associativity_failure(std::size_t order, std::span<const Element> table) {
  const auto& k = simd::active();
  for (std::size_t g = 0; g < order; ++g) {
    const auto row_g = table_row(table, order, g);
    for (std::size_t h = 0; h < order; ++h) {
      const auto row_gh = table_row(table, order, row_g[h]);
      const auto row_h = table_row(table, order, h);
      const std::size_t bad = k.compose_mismatch(row_gh.data(), row_g.data(), row_h.data(), order);
      if (bad != order) {
        return TableDefect{TableDefect::Kind::NotAssociative,
                           {static_cast<Element>(g), static_cast<Element>(h), static_cast<Element>(bad)}};
      }
    }
  }
  return std::nullopt;
}

std::optional<TableDefect> find_table_defect(std::size_t order, std::span<const Element> table) {
  using Kind = TableDefect::Kind;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      return TableDefect{Kind::OutOfRange, {static_cast<Element>(i / order), static_cast<Element>(i % order)}};
    }
  }
  if (!acts_as_identity(table, order, 0)) {
    for (std::size_t e = 1; e < order; ++e) {
      if (acts_as_identity(table, order, e)) return TableDefect{Kind::IdentityNotZero, {static_cast<Element>(e)}};
    }
    return TableDefect{Kind::NoIdentity, {}};
  }
  std::vector<std::uint8_t> seen(order);
  for (std::size_t g = 0; g < order; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t h = 0; h < order; ++h) {
      auto& s = seen[table[g * order + h]];
      if (s) return TableDefect{Kind::RowNotPermutation, {static_cast<Element>(g)}};
      s = 1;
    }
  }
  for (std::size_t h = 0; h < order; ++h) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t g = 0; g < order; ++g) {
      auto& s = seen[table[g * order + h]];
      if (s) return TableDefect{Kind::ColumnNotPermutation, {static_cast<Element>(h)}};
      s = 1;
    }
  }
  // Light's test: (x s) y = x (s y) for all x, y and every s in a generating
  // set already forces associativity. A failure is re-located with the full
  // scan so the reported triple is the lexicographically first one.
  const auto& k = simd::active();
  for (Element s : spanning_generators(table, order)) {
    const auto row_s = table_row(table, order, s);
    for (std::size_t x = 0; x < order; ++x) {
      const auto row_x = table_row(table, order, x);
      const auto row_xs = table_row(table, order, row_x[s]);
      if (k.compose_mismatch(row_xs.data(), row_x.data(), row_s.data(), order) != order) {
        return first_associativity_failure(order, table);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table, std::vector<std::string> labels,
                                    std::size_t order_cap) {
  if (order == 0) throw Error(ErrorKind::NotAGroup, "order must be positive");
  if (order > order_cap) {
    throw Error(ErrorKind::OrderCapExceeded,
                "order " + std::to_string(order) + " exceeds cap " + std::to_string(order_cap));
  }
  if (table.size() != order * order) {
    throw Error(ErrorKind::NotAGroup, "table has " + std::to_string(table.size()) + " entries, expected " +
                                          std::to_string(order * order));
  }
  if (!labels.empty() && labels.size() != order) {
    throw Error(ErrorKind::InvalidArgument, "label count does not match order");
  }
  if (auto defect = find_table_defect(order, table)) {
    const auto kind = defect->kind == TableDefect::Kind::IdentityNotZero ? ErrorKind::IdentityNotZero
                                                                          : ErrorKind::NotAGroup;
    throw Error(kind, defect->describe());
  }

  FiniteGroup G;
  G.order_ = order;
  G.table_ = std::move(table);
  G.labels_ = std::move(labels);
  G.transposed_.resize(order * order);
  G.inverse_.resize(order);
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      const Element gh = G.table_[g * order + h];
      G.transposed_[h * order + g] = gh;
      if (gh == kIdentity) G.inverse_[g] = static_cast<Element>(h);
    }
  }
  return G;
}

void FiniteGroup::check(Element g) const {
  if (g >= order_) {
    throw Error(ErrorKind::IndexOutOfRange,
                "element " + std::to_string(g) + " not in group of order " + std::to_string(order_));
  }
}

std::string FiniteGroup::label(Element g) const {
  check(g);
  return labels_.empty() ? std::to_string(g) : labels_[g];
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(const FiniteGroup& parent, Bitset mask)
    : parent_(&parent), elements_(mask.to_indices()), mask_(std::move(mask)) {}

Subgroup Subgroup::from_mask_unchecked(const FiniteGroup& parent, Bitset mask) {
  return Subgroup(parent, std::move(mask));
}

Subgroup Subgroup::from_elements(const FiniteGroup& parent, std::vector<Element> elements) {
  Bitset mask(parent.order());
  for (Element g : elements) {
    parent.check(g);
    mask.set(g);
  }
  if (!mask.test(kIdentity)) throw Error(ErrorKind::InvalidArgument, "subgroup must contain the identity");
  for (Element g : elements) {
    if (!mask.test(parent.inv(g))) throw Error(ErrorKind::InvalidArgument, "not closed under inverses");
    for (Element h : elements) {
      if (!mask.test(parent.mul(g, h))) throw Error(ErrorKind::InvalidArgument, "not closed under multiplication");
    }
  }
  return Subgroup(parent, std::move(mask));
}

// ---------------------------------------------------------------------------
// Element arithmetic

Element conjugate(const FiniteGroup& G, Element g, Element h) {
  G.check(g);
  G.check(h);
  return G.mul(G.mul(G.inv(h), g), h);
}

Element commutator(const FiniteGroup& G, Element g, Element h) {
  return G.mul(G.inv(g), conjugate(G, g, h));
}

Element power(const FiniteGroup& G, Element g, long long l) {
  G.check(g);
  // g^|G| = 1, so reduce the exponent into [0, |G|).
  const auto n = static_cast<long long>(G.order());
  auto e = static_cast<unsigned long long>(((l % n) + n) % n);
  Element result = kIdentity;
  Element base = g;
  while (e) {
    if (e & 1u) result = G.mul(result, base);
    base = G.mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t element_order(const FiniteGroup& G, Element g) {
  G.check(g);
  std::size_t k = 1;
  for (Element x = g; x != kIdentity; x = G.mul(x, g)) ++k;
  return k;
}

// ---------------------------------------------------------------------------
// Subgroup computations

Subgroup whole_group(const FiniteGroup& G) {
  Bitset mask(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) mask.set(g);
  return Subgroup::from_mask_unchecked(G, std::move(mask));
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  Bitset mask(G.order());
  mask.set(kIdentity);
  return Subgroup::from_mask_unchecked(G, std::move(mask));
}

Bitset centralizer_mask(const FiniteGroup& G, Element g) {
  G.check(g);
  Bitset mask(G.order());
  simd::active().equal_mask(G.row(g).data(), G.column(g).data(), G.order(), mask.words().data());
  return mask;
}

std::vector<Bitset> all_centralizer_masks(const FiniteGroup& G) {
  std::vector<Bitset> masks;
  masks.reserve(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) masks.push_back(centralizer_mask(G, static_cast<Element>(g)));
  return masks;
}

Subgroup centralizer(const FiniteGroup& G, Element g) {
  return Subgroup::from_mask_unchecked(G, centralizer_mask(G, g));
}

Subgroup center(const FiniteGroup& G) {
  Bitset mask(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (centralizer_mask(G, static_cast<Element>(g)).count() == G.order()) mask.set(g);
  }
  return Subgroup::from_mask_unchecked(G, std::move(mask));
}

Subgroup closure(const FiniteGroup& G, std::span<const Element> gens) {
  std::vector<Element> sorted(gens.begin(), gens.end());
  for (Element g : sorted) G.check(g);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Bitset mask(G.order());
  mask.set(kIdentity);
  std::deque<Element> queue{kIdentity};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element s : sorted) {
      const Element y = G.mul(x, s);
      if (!mask.test(y)) {
        mask.set(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup::from_mask_unchecked(G, std::move(mask));
}

Subgroup cyclic_subgroup(const FiniteGroup& G, Element g) {
  const Element gens[] = {g};
  return closure(G, gens);
}

Subgroup derived_subgroup(const FiniteGroup& G) {
  Bitset commutators(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    for (std::size_t h = g + 1; h < G.order(); ++h) {
      commutators.set(commutator(G, static_cast<Element>(g), static_cast<Element>(h)));
    }
  }
  // The commutator set is closed under conjugation ([g,h]^k = [g^k,h^k]),
  // so the subgroup it generates is already normal.
  const auto gens = commutators.to_indices();
  return closure(G, gens);
}

Subgroup intersection(const Subgroup& H, const Subgroup& K) {
  Bitset mask = H.mask();
  mask &= K.mask();
  return Subgroup::from_mask_unchecked(H.parent(), std::move(mask));
}

Subgroup join(const Subgroup& H, const Subgroup& K) {
  std::vector<Element> gens(H.elements().begin(), H.elements().end());
  gens.insert(gens.end(), K.elements().begin(), K.elements().end());
  return closure(H.parent(), gens);
}

bool is_abelian(const Subgroup& H) {
  const auto& G = H.parent();
  for (Element g : H.elements()) {
    if (!H.mask().is_subset_of(centralizer_mask(G, g))) return false;
  }
  return true;
}

bool is_cyclic(const Subgroup& H) {
  for (Element g : H.elements()) {
    if (element_order(H.parent(), g) == H.size()) return true;
  }
  return false;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (Element h : H.elements()) {
    for (std::size_t g = 0; g < G.order(); ++g) {
      if (!H.contains(conjugate(G, h, static_cast<Element>(g)))) return false;
    }
  }
  return true;
}

std::vector<Element> product_set(const Subgroup& A, const Subgroup& N) {
  const auto& G = A.parent();
  if (&G != &N.parent()) throw Error(ErrorKind::InvalidArgument, "subgroups of different groups");
  Bitset mask(G.order());
  for (Element a : A.elements()) {
    for (Element u : N.elements()) mask.set(G.mul(a, u));
  }
  return mask.to_indices();
}

}  // namespace commgraph
