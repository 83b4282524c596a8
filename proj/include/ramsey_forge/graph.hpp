#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ramsey_forge {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected loopless graph on vertices 0..vertex_count()-1.
///
/// Neighbor lists are kept sorted and symmetric; instances are immutable
/// once built.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate pairs (in either
  /// orientation) are merged. Throws InvalidArgument on a self-loop, an
  /// out-of-range endpoint, or a non-positive vertex count.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  /// Builds a graph from already sorted, symmetric, loopless neighbor lists.
  /// Only cheap structural checks are performed.
  static Graph from_sorted_adjacency(std::vector<std::vector<Vertex>> adjacency);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

Graph graph_from_edges(int vertex_count, std::span<const Edge> edges);

Graph complete_graph(int vertex_count);
Graph edgeless_graph(int vertex_count);

/// u ~ v in the result iff u != v and u, v are not adjacent in `g`.
Graph complement(const Graph& g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace ramsey_forge
