#pragma once

// Deliberately naive reference computations used to check the library.
// Nothing here goes through bitsets, SIMD kernels or union-find.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "commgraph/group.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline bool commute(const commgraph::FiniteGroup& G, std::size_t g, std::size_t h) {
  const auto n = G.order();
  const auto t = G.table();
  return t[g * n + h] == t[h * n + g];
}

inline std::vector<std::size_t> center(const commgraph::FiniteGroup& G) {
  std::vector<std::size_t> z;
  for (std::size_t g = 0; g < G.order(); ++g) {
    bool central = true;
    for (std::size_t h = 0; h < G.order() && central; ++h) central = commute(G, g, h);
    if (central) z.push_back(g);
  }
  return z;
}

inline std::vector<std::size_t> centralizer(const commgraph::FiniteGroup& G, std::size_t g) {
  std::vector<std::size_t> c;
  for (std::size_t h = 0; h < G.order(); ++h) {
    if (commute(G, g, h)) c.push_back(h);
  }
  return c;
}

// Vertices (non-central elements) and the commuting relation between them.
struct Graph {
  std::vector<std::size_t> vertices;
  Matrix adj;
};

inline Graph commuting_graph(const commgraph::FiniteGroup& G) {
  Graph out;
  const auto z = oracle::center(G);
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (!std::binary_search(z.begin(), z.end(), g)) out.vertices.push_back(g);
  }
  const std::size_t n = out.vertices.size();
  out.adj.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.adj[i][j] = i != j && commute(G, out.vertices[i], out.vertices[j]);
  }
  return out;
}

inline Matrix from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Matrix adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) {
    if (u != v) adj[u][v] = adj[v][u] = true;
  }
  return adj;
}

// All-pairs shortest paths; nullopt when some pair is unreachable.
inline std::optional<std::size_t> floyd_warshall_diameter(const Matrix& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return std::nullopt;
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  std::size_t diam = 0;
  for (const auto& row : d) {
    for (auto x : row) {
      if (x >= kInf) return std::nullopt;
      diam = std::max(diam, x);
    }
  }
  return diam;
}

inline std::vector<std::size_t> bfs_distances(const Matrix& adj, std::size_t src) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(adj.size(), kInf);
  std::deque<std::size_t> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop_front();
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (adj[u][v] && dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

// Partition by repeated BFS, as a sorted list of sorted vertex lists.
inline std::vector<std::vector<std::size_t>> bfs_partition(const Matrix& adj) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> part;
    const auto dist = bfs_distances(adj, s);
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (dist[v] != std::numeric_limits<std::size_t>::max()) {
        part.push_back(v);
        seen[v] = true;
      }
    }
    parts.push_back(std::move(part));
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace oracle
