#include "commgraph/commuting_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "commgraph/error.hpp"
#include "commgraph/union_find.hpp"

namespace commgraph {
namespace {

constexpr std::size_t kNoPosition = static_cast<std::size_t>(-1);

}  // namespace

CommutingGraph CommutingGraph::build(const FiniteGroup& G) {
  const auto masks = all_centralizer_masks(G);
  CommutingGraph graph;
  graph.position_.assign(G.order(), kNoPosition);
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (masks[g].count() != G.order()) {
      graph.position_[g] = graph.vertices_.size();
      graph.vertices_.push_back(static_cast<Element>(g));
    }
  }
  if (graph.vertices_.empty()) throw Error(ErrorKind::AbelianGroup, "commuting graph of an abelian group is empty");

  const std::size_t n = graph.vertices_.size();
  graph.adjacency_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Element g = graph.vertices_[i];
    auto& row = graph.adjacency_[i];
    masks[g].for_each([&](std::size_t h) {
      const std::size_t j = graph.position_[h];
      if (j != kNoPosition && j != i) row.set(j);
    });
  }
  return graph;
}

CommutingGraph CommutingGraph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  CommutingGraph graph;
  graph.vertices_.resize(n);
  graph.position_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    graph.vertices_[i] = static_cast<Element>(i);
    graph.position_[i] = i;
  }
  graph.adjacency_.assign(n, Bitset(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorKind::IndexOutOfRange, "edge endpoint out of range");
    if (u == v) continue;
    graph.adjacency_[u].set(v);
    graph.adjacency_[v].set(u);
  }
  return graph;
}

std::optional<std::size_t> CommutingGraph::position(Element g) const {
  if (g >= position_.size() || position_[g] == kNoPosition) return std::nullopt;
  return position_[g];
}

std::size_t CommutingGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

std::vector<std::vector<std::size_t>> components(const CommutingGraph& graph) {
  const std::size_t n = graph.vertex_count();
  UnionFind uf(n);
  for (std::size_t u = 0; u < n; ++u) {
    graph.neighbours(u).for_each([&](std::size_t v) {
      if (u < v) uf.unite(u, v);
    });
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);

  std::vector<std::vector<std::size_t>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a.front() < b.front();
  });
  return out;
}

std::vector<std::optional<std::size_t>> distances_from(const CommutingGraph& graph, std::size_t source) {
  const std::size_t n = graph.vertex_count();
  if (source >= n) throw Error(ErrorKind::IndexOutOfRange, "vertex position out of range");
  std::vector<std::optional<std::size_t>> dist(n);
  Bitset visited(n);
  Bitset frontier(n);
  Bitset next(n);
  visited.set(source);
  frontier.set(source);
  dist[source] = 0;
  for (std::size_t level = 1;; ++level) {
    next.clear();
    frontier.for_each([&](std::size_t u) { next |= graph.neighbours(u); });
    if (!next.subtract(visited)) break;
    next.for_each([&](std::size_t v) { dist[v] = level; });
    visited |= next;
    std::swap(frontier, next);
  }
  return dist;
}

std::optional<std::size_t> eccentricity(const CommutingGraph& graph, std::size_t v) {
  std::size_t worst = 0;
  for (const auto& d : distances_from(graph, v)) {
    if (!d) return std::nullopt;
    worst = std::max(worst, *d);
  }
  return worst;
}

std::optional<std::vector<std::size_t>> all_eccentricities(const CommutingGraph& graph) {
  if (graph.vertex_count() == 0 || components(graph).size() != 1) return std::nullopt;
  std::vector<std::size_t> ecc(graph.vertex_count());
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) ecc[v] = *eccentricity(graph, v);
  return ecc;
}

std::optional<std::size_t> diameter(const CommutingGraph& graph) {
  auto ecc = all_eccentricities(graph);
  if (!ecc) return std::nullopt;
  return *std::max_element(ecc->begin(), ecc->end());
}

std::optional<std::size_t> min_eccentricity(const CommutingGraph& graph) {
  auto ecc = all_eccentricities(graph);
  if (!ecc) return std::nullopt;
  return *std::min_element(ecc->begin(), ecc->end());
}

std::vector<ComponentShape> component_structure(const CommutingGraph& graph) {
  std::vector<ComponentShape> shapes;
  for (const auto& comp : components(graph)) {
    bool complete = true;
    for (std::size_t v : comp) {
      if (graph.degree(v) != comp.size() - 1) {
        complete = false;
        break;
      }
    }
    shapes.push_back({comp.size(), complete});
  }
  std::sort(shapes.begin(), shapes.end(), [](const ComponentShape& a, const ComponentShape& b) {
    return a.size != b.size ? a.size > b.size : a.complete > b.complete;
  });
  return shapes;
}

bool adjacency_is_transitive(const CommutingGraph& graph) {
  // u~v, v~w forces N(v) u {v} = N(u) u {u} for every edge u~v.
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    Bitset closed_u = graph.neighbours(u);
    closed_u.set(u);
    bool ok = true;
    graph.neighbours(u).for_each([&](std::size_t v) {
      if (!ok) return;
      Bitset closed_v = graph.neighbours(v);
      closed_v.set(v);
      ok = closed_v == closed_u;
    });
    if (!ok) return false;
  }
  return true;
}

std::string export_dot(const CommutingGraph& graph, const FiniteGroup* labels_from) {
  std::ostringstream out;
  out << "graph commuting {\n";
  const bool labelled = labels_from && labels_from->has_labels();
  for (Element g : graph.vertices()) {
    out << g;
    if (labelled) out << " [label=\"" << labels_from->label(g) << "\"]";
    out << ";\n";
  }
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    graph.neighbours(u).for_each([&](std::size_t v) {
      if (u < v) out << graph.vertices()[u] << " -- " << graph.vertices()[v] << ";\n";
    });
  }
  out << "}\n";
  return out.str();
}

}  // namespace commgraph
