#include "ramsey_forge/coloring.hpp"

#include <algorithm>
#include <string>

#include "ramsey_forge/error.hpp"
#include "ramsey_forge/solvers.hpp"

namespace ramsey_forge {

namespace {

void check_shape(int vertex_count, int color_count) {
  if (vertex_count <= 0) {
    throw InvalidArgument("coloring needs a positive vertex count, got " +
                          std::to_string(vertex_count));
  }
  if (color_count <= 0 || color_count > kMaxColors) {
    throw InvalidArgument("color count must be in 1.." + std::to_string(kMaxColors) + ", got " +
                          std::to_string(color_count));
  }
}

void check_color(const EdgeColoring& c, Color color) {
  if (color < 1 || color > c.color_count()) {
    throw InvalidArgument("color " + std::to_string(color) + " outside 1.." +
                          std::to_string(c.color_count()));
  }
}

std::string pair_name(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

EdgeColoring::EdgeColoring(int vertex_count, int color_count)
    : size_(vertex_count),
      colors_(color_count),
      matrix_(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(vertex_count), 0) {}

EdgeColoring EdgeColoring::from_function(int vertex_count, int color_count,
                                         const std::function<Color(Vertex, Vertex)>& color_of) {
  check_shape(vertex_count, color_count);
  ColoringBuilder builder(vertex_count, color_count);
  for (Vertex u = 0; u < vertex_count; ++u) {
    for (Vertex v = u + 1; v < vertex_count; ++v) {
      Color c = color_of(u, v);
      if (c < 1 || c > color_count) {
        throw InvalidArgument("pair " + pair_name(u, v) + " got color " + std::to_string(c) +
                              " outside 1.." + std::to_string(color_count));
      }
      builder.set(u, v, c);
    }
  }
  return std::move(builder).build();
}

EdgeColoring EdgeColoring::from_upper_triangle(int vertex_count, int color_count,
                                               std::span<const Color> colors) {
  check_shape(vertex_count, color_count);
  const auto pairs =
      static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(vertex_count - 1) / 2;
  if (colors.size() != pairs) {
    throw InvalidArgument("expected " + std::to_string(pairs) + " pair colors, got " +
                          std::to_string(colors.size()));
  }
  std::size_t i = 0;
  return from_function(vertex_count, color_count, [&](Vertex, Vertex) { return colors[i++]; });
}

EdgeColoring EdgeColoring::monochromatic(int vertex_count, int color_count, Color color) {
  return from_function(vertex_count, color_count, [color](Vertex, Vertex) { return color; });
}

namespace {

int checked_vertex_count(int vertex_count, int color_count, const Limits& limits) {
  check_shape(vertex_count, color_count);
  if (static_cast<std::uint64_t>(vertex_count) > limits.coloring_vertices) {
    throw CapExceeded("coloring on " + std::to_string(vertex_count) + " vertices",
                      static_cast<unsigned long long>(vertex_count), limits.coloring_vertices);
  }
  return vertex_count;
}

}  // namespace

ColoringBuilder::ColoringBuilder(int vertex_count, int color_count, const Limits& limits)
    : coloring_(checked_vertex_count(vertex_count, color_count, limits), color_count) {}

EdgeColoring ColoringBuilder::build() && {
  const int n = coloring_.size_;
  for (Vertex u = 0; u < n; ++u) {
    auto row = coloring_.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (row[v] < 1 || row[v] > coloring_.colors_) {
        throw InvalidArgument("pair " + pair_name(u, v) + " has no valid color");
      }
    }
  }
  return std::move(coloring_);
}

ColoringSpec::ColoringSpec(std::vector<int> forbidden) : forbidden_(std::move(forbidden)) {
  for (int k : forbidden_) {
    if (k < 2) {
      throw InvalidArgument("forbidden clique sizes must be >= 2, got " + std::to_string(k));
    }
  }
}

ColoringSpec ColoringSpec::diagonal(int colors, int k) {
  return ColoringSpec(std::vector<int>(static_cast<std::size_t>(colors), k));
}

Graph color_class(const EdgeColoring& c, Color color) {
  check_color(c, color);
  const int n = c.vertex_count();
  std::vector<std::vector<Vertex>> adjacency(n);
  for (Vertex u = 0; u < n; ++u) {
    auto row = c.row(u);
    for (Vertex v = 0; v < n; ++v) {
      if (v != u && row[v] == color) adjacency[u].push_back(v);
    }
  }
  return Graph::from_sorted_adjacency(std::move(adjacency));
}

EdgeColoring induced_subcoloring(const EdgeColoring& c, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw InvalidArgument("induced subcoloring needs at least one vertex");
  std::vector<bool> seen(c.vertex_count(), false);
  for (Vertex v : vertices) {
    if (v < 0 || v >= c.vertex_count()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(c.vertex_count() - 1));
    }
    if (seen[v]) throw InvalidArgument("vertex " + std::to_string(v) + " listed twice");
    seen[v] = true;
  }
  return EdgeColoring::from_function(
      static_cast<int>(vertices.size()), c.color_count(),
      [&](Vertex i, Vertex j) { return c.color(vertices[i], vertices[j]); });
}

namespace {

void check_permutation(std::span<const Color> perm, int n) {
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("color permutation has " + std::to_string(perm.size()) +
                          " entries, expected " + std::to_string(n));
  }
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (Color p : perm) {
    if (p < 1 || p > n) throw InvalidArgument("color permutation maps outside 1.." + std::to_string(n));
    if (hit[p]) {
      throw InvalidArgument("color permutation is not a bijection: color " + std::to_string(p) +
                            " is hit twice");
    }
    hit[p] = true;
  }
}

}  // namespace

EdgeColoring relabel_colors(const EdgeColoring& c, std::span<const Color> perm) {
  check_permutation(perm, c.color_count());
  return EdgeColoring::from_function(c.vertex_count(), c.color_count(), [&](Vertex u, Vertex v) {
    return perm[static_cast<std::size_t>(c.color(u, v) - 1)];
  });
}

ColoringSpec permute_spec(const ColoringSpec& spec, std::span<const Color> perm) {
  check_permutation(perm, static_cast<int>(spec.size()));
  std::vector<int> out(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    out[static_cast<std::size_t>(perm[i] - 1)] = spec.values()[i];
  }
  return ColoringSpec(std::move(out));
}

std::vector<Vertex> front_permutation(int vertex_count, std::span<const Vertex> front) {
  std::vector<bool> used(static_cast<std::size_t>(vertex_count), false);
  std::vector<Vertex> perm;
  perm.reserve(static_cast<std::size_t>(vertex_count));
  for (Vertex v : front) {
    if (v < 0 || v >= vertex_count) {
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
    if (used[v]) throw InvalidArgument("vertex " + std::to_string(v) + " listed twice");
    used[v] = true;
    perm.push_back(v);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (!used[v]) perm.push_back(v);
  }
  return perm;
}

VerificationReport validate_coloring(const EdgeColoring& c, const ColoringSpec& spec,
                                     const SolverOptions& options) {
  if (spec.size() != static_cast<std::size_t>(c.color_count())) {
    throw InvalidArgument("spec lists " + std::to_string(spec.size()) +
                          " clique sizes but the coloring has " +
                          std::to_string(c.color_count()) + " colors");
  }
  if (static_cast<std::uint64_t>(c.vertex_count()) > options.limits.solver_vertices) {
    throw CapExceeded("validating a coloring on " + std::to_string(c.vertex_count()) + " vertices",
                      static_cast<unsigned long long>(c.vertex_count()),
                      options.limits.solver_vertices);
  }
  VerificationReport report{spec, {}, true};
  for (Color color = 1; color <= c.color_count(); ++color) {
    SearchResult best = max_clique(BitMatrix::from_color_class(c, color), options.threads);
    report.pass = report.pass && best.size < spec.forbidden(color);
    report.colors.push_back({color, best.size, std::move(best.witness)});
  }
  return report;
}

VerificationReport validate_coloring(const EdgeColoring& c, const ColoringSpec& spec) {
  return validate_coloring(c, spec, SolverOptions{});
}

}  // namespace ramsey_forge
