#pragma once

#include <span>
#include <vector>

#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/limits.hpp"

namespace ramsey_forge {

// Vertex indexing for every product below is row-major: the pair (a, b)
// of a product of X and Y is vertex a * |Y| + b.

/// Strong product: distinct (a1,b1), (a2,b2) are adjacent iff each
/// coordinate is equal or adjacent.
Graph strong_product(const Graph& g1, const Graph& g2, const Limits& limits = {});

/// Left fold of strong_product over `graphs` (at least one). Vertex
/// (x1,...,xk) has index ((x1*|V2| + x2)*|V3| + x3)...
Graph strong_product(std::span<const Graph> graphs, const Limits& limits = {});

/// n-fold strong power G^n, indexed as the left fold above. Throws
/// CapExceeded before allocating when |V|^n exceeds limits.graph_vertices.
Graph graph_power(const Graph& g, int n, const Limits& limits = {});

/// Composition G[H]: (u1,v1) ~ (u2,v2) iff u1 ~ u2 in G, or u1 = u2 and
/// v1 ~ v2 in H.
Graph composition_graph(const Graph& g, const Graph& h, const Limits& limits = {});

/// Composition of colorings: pairs inside one copy of H keep H's color,
/// pairs across copies u1 != u2 take G(u1, u2). The result has
/// max(colors(G), colors(H)) colors.
EdgeColoring composition_coloring(const EdgeColoring& g, const EdgeColoring& h,
                                  const Limits& limits = {});

/// Block of a vertex of the doubling construction.
struct ProductVertex {
  enum class Block { Grid, Copy };
  Block block;
  /// Grid: (i1, i2) with i1, i2 vertices of G. Copy: (i, j) with i in M and
  /// j a vertex of H.
  Vertex first;
  Vertex second;

  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

/// Layout of the doubling construction's vertex set: s*s grid vertices
/// (i1, i2) at index i1*s + i2, then m*t copy vertices (i, j) at index
/// s*s + i*t + j.
class DoublingLayout {
 public:
  DoublingLayout(int s, int m, int t) : s_(s), m_(m), t_(t) {}

  int vertex_count() const noexcept { return s_ * s_ + m_ * t_; }
  int grid_count() const noexcept { return s_ * s_; }
  int copy_count() const noexcept { return m_ * t_; }

  ProductVertex vertex(Vertex index) const;
  Vertex index(const ProductVertex& v) const;

 private:
  int s_;
  int m_;
  int t_;
};

/// Builds the 2n-coloring F on s^2 + m*t vertices from an n-coloring `g` of
/// K_s without monochromatic K_k whose first m vertices span no color-1
/// pair, and an n-coloring `h` of K_t without a color-1 K_{k-1} and without
/// a K_k in colors 2..n. Colors, with grid vertices (i1,i2), (j1,j2) and
/// copy vertices (i,j):
///
///   grid-grid, i1 != j1, i2 = j2 < m, g(i1,j1) = 1   -> n + 1
///   grid-grid, i1 = j1                              -> g(i2,j2) + n
///   grid-grid, other i1 != j1                       -> g(i1,j1)
///   copy-copy, same copy i                          -> h(j1,j2)
///   copy-copy, copies i1 != i2                      -> g(i1,i2) + n
///   grid (i1,q) - copy (i,j), q != i                -> g(q,i) + n
///   grid (i1,q) - copy (q,j)                        -> 1
///
/// Vertices are laid out as in DoublingLayout. Every precondition failure
/// throws PreconditionViolation carrying the offending vertices (a pair of
/// M, or a forbidden monochromatic clique of g or h). Requires k >= 3.
EdgeColoring theorem2_construct(const EdgeColoring& g, int m, const EdgeColoring& h, int k,
                                const Limits& limits = {});

/// Graphs G_1..G_n with u ~ v in G_i iff c(u,v) != i. Independent sets of
/// G_i are exactly the color-i cliques of c, and the diagonal of their
/// strong product is independent.
std::vector<Graph> emt_product_graphs(const EdgeColoring& c);

}  // namespace ramsey_forge
