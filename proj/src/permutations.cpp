#include <deque>
#include <map>

#include "commgraph/error.hpp"
#include "commgraph/ingest.hpp"

namespace commgraph {
namespace {

bool is_bijection(const Permutation& p) {
  std::vector<std::uint8_t> hit(p.size());
  for (auto image : p) {
    if (image >= p.size() || hit[image]) return false;
    hit[image] = 1;
  }
  return true;
}

// i^(pq) = (i^p)^q
Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

}  // namespace

PermutationGroup close_permutations(const PermGenSet& gens, std::size_t order_cap) {
  if (gens.generators.empty()) throw Error(ErrorKind::InvalidArgument, "at least one generator is required");
  for (std::size_t k = 0; k < gens.generators.size(); ++k) {
    const auto& g = gens.generators[k];
    if (g.size() != gens.degree || !is_bijection(g)) {
      throw Error(ErrorKind::InvalidArgument,
                  "generator " + std::to_string(k) + " is not a permutation of degree " + std::to_string(gens.degree));
    }
  }

  Permutation identity(gens.degree);
  for (std::size_t i = 0; i < gens.degree; ++i) identity[i] = static_cast<std::uint32_t>(i);

  std::vector<Permutation> elements{identity};
  std::map<Permutation, Element> index{{identity, kIdentity}};
  std::deque<Element> queue{kIdentity};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (const auto& g : gens.generators) {
      auto y = compose(elements[x], g);
      if (index.contains(y)) continue;
      if (elements.size() == order_cap) {
        throw Error(ErrorKind::OrderCapExceeded, "permutation group exceeds order cap " + std::to_string(order_cap));
      }
      index.emplace(y, static_cast<Element>(elements.size()));
      queue.push_back(static_cast<Element>(elements.size()));
      elements.push_back(std::move(y));
    }
  }

  const std::size_t order = elements.size();
  std::vector<Element> table(order * order);
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) table[g * order + h] = index.at(compose(elements[g], elements[h]));
  }
  return {FiniteGroup::from_table(order, std::move(table), {}, order_cap), std::move(elements)};
}

}  // namespace commgraph
