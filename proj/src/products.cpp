#include "ramsey_forge/products.hpp"

#include <algorithm>
#include <string>

#include "ramsey_forge/error.hpp"
#include "ramsey_forge/solvers.hpp"

namespace ramsey_forge {

namespace {

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b, std::uint64_t cap,
                              const char* what) {
  if (a != 0 && b > cap / a) {
    throw CapExceeded(std::string(what), cap + 1, cap);
  }
  if (a * b > cap) throw CapExceeded(std::string(what), a * b, cap);
  return a * b;
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  auto nbrs = g.neighbors(v);
  std::vector<Vertex> out(nbrs.begin(), nbrs.end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

}  // namespace

Graph strong_product(const Graph& g1, const Graph& g2, const Limits& limits) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  checked_product(static_cast<std::uint64_t>(n1), static_cast<std::uint64_t>(n2),
                  limits.graph_vertices, "strong product vertex count");

  std::vector<std::vector<Vertex>> closed2(n2);
  for (Vertex b = 0; b < n2; ++b) closed2[b] = closed_neighborhood(g2, b);

  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n1) * n2);
  for (Vertex a = 0; a < n1; ++a) {
    auto closed1 = closed_neighborhood(g1, a);
    for (Vertex b = 0; b < n2; ++b) {
      const Vertex self = a * n2 + b;
      auto& out = adjacency[static_cast<std::size_t>(self)];
      out.reserve(closed1.size() * closed2[b].size() - 1);
      for (Vertex a2 : closed1) {
        for (Vertex b2 : closed2[b]) {
          const Vertex other = a2 * n2 + b2;
          if (other != self) out.push_back(other);
        }
      }
    }
  }
  return Graph::from_sorted_adjacency(std::move(adjacency));
}

Graph strong_product(std::span<const Graph> graphs, const Limits& limits) {
  if (graphs.empty()) throw InvalidArgument("strong product of an empty list");
  std::uint64_t total = 1;
  for (const auto& g : graphs) {
    total = checked_product(total, static_cast<std::uint64_t>(g.vertex_count()),
                            limits.graph_vertices, "strong product vertex count");
  }
  Graph acc = graphs.front();
  for (std::size_t i = 1; i < graphs.size(); ++i) acc = strong_product(acc, graphs[i], limits);
  return acc;
}

Graph graph_power(const Graph& g, int n, const Limits& limits) {
  if (n < 1) throw InvalidArgument("graph power needs n >= 1, got " + std::to_string(n));
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total = checked_product(total, static_cast<std::uint64_t>(g.vertex_count()),
                            limits.graph_vertices, "graph power vertex count");
  }
  Graph acc = g;
  for (int i = 1; i < n; ++i) acc = strong_product(acc, g, limits);
  return acc;
}

Graph composition_graph(const Graph& g, const Graph& h, const Limits& limits) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  checked_product(static_cast<std::uint64_t>(ng), static_cast<std::uint64_t>(nh),
                  limits.graph_vertices, "composition vertex count");

  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(ng) * nh);
  for (Vertex u = 0; u < ng; ++u) {
    for (Vertex v = 0; v < nh; ++v) {
      auto& out = adjacency[static_cast<std::size_t>(u * nh + v)];
      out.reserve(g.neighbors(u).size() * nh + h.neighbors(v).size());
      // Neighbors come out sorted: blocks u2 < u, then the own block, then u2 > u.
      auto gn = g.neighbors(u);
      auto split = std::lower_bound(gn.begin(), gn.end(), u);
      for (auto it = gn.begin(); it != split; ++it) {
        for (Vertex v2 = 0; v2 < nh; ++v2) out.push_back(*it * nh + v2);
      }
      for (Vertex v2 : h.neighbors(v)) out.push_back(u * nh + v2);
      for (auto it = split; it != gn.end(); ++it) {
        for (Vertex v2 = 0; v2 < nh; ++v2) out.push_back(*it * nh + v2);
      }
    }
  }
  return Graph::from_sorted_adjacency(std::move(adjacency));
}

EdgeColoring composition_coloring(const EdgeColoring& g, const EdgeColoring& h,
                                  const Limits& limits) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  const auto total = checked_product(static_cast<std::uint64_t>(ng),
                                     static_cast<std::uint64_t>(nh), limits.coloring_vertices,
                                     "composition coloring vertex count");
  ColoringBuilder builder(static_cast<int>(total), std::max(g.color_count(), h.color_count()),
                          limits);
  const int n = builder.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    const Vertex u1 = a / nh;
    const Vertex v1 = a % nh;
    for (Vertex b = a + 1; b < n; ++b) {
      const Vertex u2 = b / nh;
      const Vertex v2 = b % nh;
      builder.set(a, b, u1 == u2 ? h.color(v1, v2) : g.color(u1, u2));
    }
  }
  return std::move(builder).build();
}

ProductVertex DoublingLayout::vertex(Vertex index) const {
  if (index < 0 || index >= vertex_count()) {
    throw InvalidArgument("vertex " + std::to_string(index) + " outside the construction");
  }
  if (index < grid_count()) {
    return {ProductVertex::Block::Grid, index / s_, index % s_};
  }
  const Vertex rest = index - grid_count();
  return {ProductVertex::Block::Copy, rest / t_, rest % t_};
}

Vertex DoublingLayout::index(const ProductVertex& v) const {
  if (v.block == ProductVertex::Block::Grid) {
    if (v.first < 0 || v.first >= s_ || v.second < 0 || v.second >= s_) {
      throw InvalidArgument("grid vertex out of range");
    }
    return v.first * s_ + v.second;
  }
  if (v.first < 0 || v.first >= m_ || v.second < 0 || v.second >= t_) {
    throw InvalidArgument("copy vertex out of range");
  }
  return grid_count() + v.first * t_ + v.second;
}

namespace {

void check_clique_free(const EdgeColoring& c, const ColoringSpec& spec, const char* name) {
  for (Color color = 1; color <= c.color_count(); ++color) {
    const int k = spec.forbidden(color);
    if (auto clique = has_monochromatic_clique(c, color, k)) {
      throw PreconditionViolation(std::string(name) + " contains a monochromatic K_" +
                                      std::to_string(k) + " in color " + std::to_string(color),
                                  std::move(*clique));
    }
  }
}

}  // namespace

EdgeColoring theorem2_construct(const EdgeColoring& g, int m, const EdgeColoring& h, int k,
                                const Limits& limits) {
  const int s = g.vertex_count();
  const int t = h.vertex_count();
  const int n = g.color_count();
  if (k < 3) throw PreconditionViolation("clique size k must be at least 3", {});
  if (h.color_count() != n) {
    throw PreconditionViolation("g and h must use the same number of colors (" +
                                    std::to_string(n) + " vs " +
                                    std::to_string(h.color_count()) + ")",
                                {});
  }
  if (2 * n > kMaxColors) throw PreconditionViolation("too many colors for the doubling", {});
  if (m < 0 || m > s) {
    throw PreconditionViolation("m = " + std::to_string(m) + " outside 0.." + std::to_string(s),
                                {});
  }
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = u + 1; v < m; ++v) {
      if (g.color(u, v) == 1) {
        throw PreconditionViolation("the first m vertices of g span a color-1 pair", {u, v});
      }
    }
  }
  check_clique_free(g, ColoringSpec::diagonal(n, k), "g");
  std::vector<int> h_spec(static_cast<std::size_t>(n), k);
  h_spec[0] = k - 1;
  check_clique_free(h, ColoringSpec(h_spec), "h");

  const DoublingLayout layout(s, m, t);
  const std::uint64_t total = static_cast<std::uint64_t>(s) * s + static_cast<std::uint64_t>(m) * t;
  if (total > limits.coloring_vertices) {
    throw CapExceeded("doubling construction", total, limits.coloring_vertices);
  }
  ColoringBuilder builder(layout.vertex_count(), 2 * n, limits);
  const int grid = layout.grid_count();

  for (Vertex a = 0; a < layout.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < layout.vertex_count(); ++b) {
      Color color;
      if (b < grid) {
        const Vertex i1 = a / s, i2 = a % s;
        const Vertex j1 = b / s, j2 = b % s;
        if (i1 == j1) {
          color = g.color(i2, j2) + n;
        } else if (i2 == j2 && i2 < m && g.color(i1, j1) == 1) {
          color = n + 1;
        } else {
          color = g.color(i1, j1);
        }
      } else if (a >= grid) {
        const Vertex i1 = (a - grid) / t, j1 = (a - grid) % t;
        const Vertex i2 = (b - grid) / t, j2 = (b - grid) % t;
        color = i1 == i2 ? h.color(j1, j2) : g.color(i1, i2) + n;
      } else {
        // a is a grid vertex (i1, q), b a copy vertex (i, j).
        const Vertex q = a % s;
        const Vertex i = (b - grid) / t;
        color = q == i ? 1 : g.color(q, i) + n;
      }
      builder.set(a, b, color);
    }
  }
  return std::move(builder).build();
}

std::vector<Graph> emt_product_graphs(const EdgeColoring& c) {
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(c.color_count()));
  for (Color color = 1; color <= c.color_count(); ++color) {
    out.push_back(complement(color_class(c, color)));
  }
  return out;
}

}  // namespace ramsey_forge
