#pragma once

#include <utility>
#include <vector>

#include "mcb/error.hpp"

namespace mcb {

// Undirected multigraph. Vertices are 1..vertex_count; edges are labeled
// 1..edges.size() by their position and may be loops or parallel copies.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int vertices, std::vector<std::pair<int, int>> edge_list)
      : vertex_count(vertices), edges(std::move(edge_list)) {
    if (vertex_count < 1) throw InputError("graph needs at least one vertex");
    for (const auto& [u, v] : edges)
      if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
        throw InputError("edge endpoint out of range");
  }

  static Graph complete(int vertices) {
    std::vector<std::pair<int, int>> edge_list;
    for (int u = 1; u <= vertices; ++u)
      for (int v = u + 1; v <= vertices; ++v) edge_list.emplace_back(u, v);
    return Graph(vertices, std::move(edge_list));
  }

  static Graph cycle(int vertices) {
    std::vector<std::pair<int, int>> edge_list;
    for (int u = 1; u < vertices; ++u) edge_list.emplace_back(u, u + 1);
    if (vertices >= 2) edge_list.emplace_back(vertices, 1);
    return Graph(vertices, std::move(edge_list));
  }
};

// Directed graph on vertices 1..vertex_count; no self-loops.
struct Digraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> out;  // out[v-1] = sorted out-neighbors of v

  explicit Digraph(int vertices = 0)
      : vertex_count(vertices),
        out(static_cast<std::size_t>(vertices < 0 ? 0 : vertices)) {}

  void add_edge(int from, int to) {
    if (from == to) return;
    out[from - 1].push_back(to);
  }
};

}  // namespace mcb
