#include "ramsey_forge/graph.hpp"

#include <algorithm>
#include <string>

#include "ramsey_forge/error.hpp"

namespace ramsey_forge {

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count <= 0) {
    throw InvalidArgument("graph needs a positive vertex count, got " +
                          std::to_string(vertex_count));
  }
  std::vector<std::vector<Vertex>> adjacency(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside 0.." + std::to_string(vertex_count - 1));
    }
    if (u == v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  Graph g;
  for (auto& nbrs : adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += nbrs.size();
  }
  g.edge_count_ /= 2;
  g.adjacency_ = std::move(adjacency);
  return g;
}

Graph Graph::from_sorted_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  if (adjacency.empty()) throw InvalidArgument("graph needs a positive vertex count, got 0");
  Graph g;
  for (const auto& nbrs : adjacency) g.edge_count_ += nbrs.size();
  if (g.edge_count_ % 2 != 0) throw InvalidArgument("adjacency lists are not symmetric");
  g.edge_count_ /= 2;
  g.adjacency_ = std::move(adjacency);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph graph_from_edges(int vertex_count, std::span<const Edge> edges) {
  return Graph::from_edges(vertex_count, edges);
}

Graph complete_graph(int vertex_count) {
  return complement(edgeless_graph(vertex_count));
}

Graph edgeless_graph(int vertex_count) {
  return Graph::from_edges(vertex_count, {});
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> adjacency(n);
  for (Vertex u = 0; u < n; ++u) {
    auto nbrs = g.neighbors(u);
    auto it = nbrs.begin();
    adjacency[u].reserve(n - 1 - nbrs.size());
    for (Vertex v = 0; v < n; ++v) {
      if (it != nbrs.end() && *it == v) {
        ++it;
        continue;
      }
      if (v != u) adjacency[u].push_back(v);
    }
  }
  return Graph::from_sorted_adjacency(std::move(adjacency));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.vertex_count()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

}  // namespace ramsey_forge
