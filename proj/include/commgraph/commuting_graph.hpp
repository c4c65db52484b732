#pragma once

// The commuting graph: non-central elements, adjacent when distinct and
// commuting. Adjacency is a dense bit row per vertex.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/bitset.hpp"
#include "commgraph/group.hpp"

namespace commgraph {

class CommutingGraph {
 public:
  // Throws Error(AbelianGroup) when G is abelian (no vertices).
  static CommutingGraph build(const FiniteGroup& G);

  // Arbitrary simple graph on positions 0..n-1; used for standalone graph
  // algorithms and tests. edges are unordered position pairs.
  static CommutingGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  // Sorted element indices; vertex position i holds element vertices()[i].
  const std::vector<Element>& vertices() const { return vertices_; }
  // Position of element g, or nullopt when g is central.
  std::optional<std::size_t> position(Element g) const;

  const Bitset& neighbours(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }
  std::size_t edge_count() const;

 private:
  std::vector<Element> vertices_;
  std::vector<std::size_t> position_;  // element -> position, npos for central elements
  std::vector<Bitset> adjacency_;
};

// Components sorted by (size descending, least vertex); each sorted.
// Computed with union-find over the edge set.
std::vector<std::vector<std::size_t>> components(const CommutingGraph& graph);

// Breadth-first distances from source; nullopt entries are unreachable.
std::vector<std::optional<std::size_t>> distances_from(const CommutingGraph& graph, std::size_t source);

// Absent exactly when the graph is disconnected (or has no vertices).
std::optional<std::size_t> eccentricity(const CommutingGraph& graph, std::size_t v);
// Eccentricity of every vertex position; nullopt when disconnected.
std::optional<std::vector<std::size_t>> all_eccentricities(const CommutingGraph& graph);
std::optional<std::size_t> diameter(const CommutingGraph& graph);
std::optional<std::size_t> min_eccentricity(const CommutingGraph& graph);

struct ComponentShape {
  std::size_t size;
  bool complete;
  friend auto operator<=>(const ComponentShape&, const ComponentShape&) = default;
};

// One entry per component, sorted by (size descending, complete first).
std::vector<ComponentShape> component_structure(const CommutingGraph& graph);

// u~v and v~w with u != w imply u~w.
bool adjacency_is_transitive(const CommutingGraph& graph);

// `graph commuting {` with one `a -- b;` line per edge (a < b, sorted), where
// a and b are element indices. When labels is true and the group carries
// builder names, each vertex also gets a label attribute line.
std::string export_dot(const CommutingGraph& graph, const FiniteGroup* labels_from = nullptr);

}  // namespace commgraph
