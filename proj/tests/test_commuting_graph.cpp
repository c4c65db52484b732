#include <random>

#include "doctest.h"

#include "commgraph/commuting_graph.hpp"
#include "commgraph/error.hpp"
#include "commgraph/ingest.hpp"
#include "commgraph/union_find.hpp"
#include "oracles.hpp"

using namespace commgraph;

namespace {

using Shapes = std::vector<ComponentShape>;

std::vector<std::vector<std::size_t>> sorted_components(const CommutingGraph& g) {
  auto parts = components(g);
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

oracle::Matrix matrix_of(const CommutingGraph& g) {
  oracle::Matrix adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = 0; v < g.vertex_count(); ++v) adj[u][v] = g.adjacent(u, v);
  return adj;
}

}  // namespace

TEST_CASE("S3") {
  const auto G = build_metacyclic({2, 3, 0, 2});
  const auto g = CommutingGraph::build(G);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 1);
  CHECK(g.vertices() == std::vector<Element>{1, 2, 3, 4, 5});
  CHECK(component_structure(g) == Shapes{{2, true}, {1, true}, {1, true}, {1, true}});
  CHECK_FALSE(diameter(g));
  CHECK_FALSE(all_eccentricities(g));
  CHECK(adjacency_is_transitive(g));
  CHECK(export_dot(g) == "graph commuting {\n1;\n2;\n3;\n4;\n5;\n1 -- 2;\n}\n");
  CHECK(export_dot(g, &G) ==
        "graph commuting {\n1 [label=\"x\"];\n2 [label=\"x^2\"];\n3 [label=\"a\"];\n4 [label=\"a x\"];\n"
        "5 [label=\"a x^2\"];\n1 -- 2;\n}\n");
}

TEST_CASE("dihedral of order 12 and quaternion") {
  const auto D = CommutingGraph::build(build_dihedral(3));
  CHECK(D.vertex_count() == 10);
  CHECK(component_structure(D) == Shapes{{4, true}, {2, true}, {2, true}, {2, true}});
  CHECK_FALSE(D.position(0));
  CHECK_FALSE(D.position(3));
  CHECK(*D.position(4) == 2);

  const auto Q = CommutingGraph::build(build_metacyclic({2, 4, 2, 3}));
  CHECK(component_structure(Q) == Shapes{{2, true}, {2, true}, {2, true}});
  CHECK(Q.edge_count() == 3);
}

TEST_CASE("abelian groups have no graph") {
  try {
    CommutingGraph::build(build_metacyclic({1, 12, 0, 1}));
    FAIL("built");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AbelianGroup);
  }
}

TEST_CASE("adjacency is the centralizer minus the center") {
  for (const MetacyclicParams p : {MetacyclicParams{4, 15, 0, 2}, MetacyclicParams{6, 9, 3, 4},
                                   MetacyclicParams{2, 4, 2, 3}, MetacyclicParams{4, 12, 6, 5}}) {
    REQUIRE(metacyclic_inconsistency(p).empty());
    const auto G = build_metacyclic(p);
    const auto g = CommutingGraph::build(G);
    const auto ref = oracle::commuting_graph(G);
    CHECK(std::vector<std::size_t>(g.vertices().begin(), g.vertices().end()) == ref.vertices);
    CHECK(matrix_of(g) == ref.adj);
    const auto Z = center(G);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      const auto C = centralizer(G, g.vertices()[i]);
      CHECK(g.degree(i) == C.size() - Z.size() - 1);
    }
  }
}

TEST_CASE("distances agree with Floyd-Warshall and components with repeated BFS") {
  std::vector<FiniteGroup> groups;
  groups.push_back(build_metacyclic({4, 15, 0, 2}));
  groups.push_back(build_example2(9, 6));
  groups.push_back(build_dihedral(5));
  groups.push_back(build_metacyclic({6, 9, 3, 4}));
  groups.push_back(read_cayley_file(std::string(COMMGRAPH_DATA_DIR) + "/smallgroup_48_15.cayley"));
  groups.push_back(read_cayley_file(std::string(COMMGRAPH_DATA_DIR) + "/smallgroup_96_118.cayley"));
  for (const auto& G : groups) {
    CAPTURE(G.order());
    const auto g = CommutingGraph::build(G);
    const auto ref = oracle::commuting_graph(G);
    CHECK(diameter(g) == oracle::floyd_warshall_diameter(ref.adj));
    CHECK(sorted_components(g) == oracle::bfs_partition(ref.adj));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto d = distances_from(g, v);
      const auto r = oracle::bfs_distances(ref.adj, v);
      for (std::size_t w = 0; w < g.vertex_count(); ++w) {
        CHECK(d[w].value_or(std::numeric_limits<std::size_t>::max()) == r[w]);
      }
    }
  }
}

TEST_CASE("random graphs") {
  std::mt19937 rng(2024);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rng() % 70;
    const double p = (rng() % 100) / 400.0;
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const auto g = CommutingGraph::from_edges(n, edges);
    const auto adj = oracle::from_edges(n, edges);
    CAPTURE(n);
    CHECK(g.edge_count() == edges.size());
    CHECK(diameter(g) == oracle::floyd_warshall_diameter(adj));
    CHECK(sorted_components(g) == oracle::bfs_partition(adj));
  }
}

TEST_CASE("component ordering and completeness") {
  // Triangle, a path of three, an isolated vertex.
  const auto g = CommutingGraph::from_edges(7, {{4, 5}, {5, 6}, {4, 6}, {0, 1}, {1, 2}});
  CHECK(components(g) == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {4, 5, 6}, {3}});
  CHECK(component_structure(g) == Shapes{{3, true}, {3, false}, {1, true}});
  CHECK_FALSE(adjacency_is_transitive(g));
  CHECK(*eccentricity(CommutingGraph::from_edges(3, {{0, 1}, {1, 2}}), 0) == 2);
  CHECK(*min_eccentricity(CommutingGraph::from_edges(3, {{0, 1}, {1, 2}})) == 1);
}

TEST_CASE("union-find") {
  UnionFind uf(6);
  uf.unite(4, 5);
  uf.unite(1, 4);
  uf.unite(2, 3);
  CHECK(uf.find(5) == uf.find(1));
  CHECK(uf.find(2) == uf.find(3));
  CHECK(uf.find(0) != uf.find(1));
  CHECK(uf.find(5) == 4);
  CHECK(uf.set_size(1) == 3);
}

TEST_CASE("complete and edgeless graphs") {
  const auto k4 = CommutingGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(*diameter(k4) == 1);
  CHECK(*min_eccentricity(k4) == 1);
  const auto empty = CommutingGraph::from_edges(3, {});
  CHECK(export_dot(empty) == "graph commuting {\n0;\n1;\n2;\n}\n");
  CHECK(components(empty).size() == 3);
}
