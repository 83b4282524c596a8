#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/limits.hpp"

namespace ramsey_forge {

using Color = int;

/// Largest supported number of colors; colors are stored one byte per pair.
inline constexpr int kMaxColors = 255;

/// Edge coloring of the complete graph K_s with colors 1..n.
///
/// Storage is a dense symmetric s*s byte matrix (diagonal 0), so color
/// lookups are O(1) and rows can be scanned directly.
class EdgeColoring {
 public:
  /// Colors every pair u < v with `color_of(u, v)`. Throws InvalidArgument
  /// when a returned color is outside 1..color_count.
  static EdgeColoring from_function(int vertex_count, int color_count,
                                    const std::function<Color(Vertex, Vertex)>& color_of);

  /// Colors listed row by row over the upper triangle: (0,1),(0,2),...,(1,2),...
  static EdgeColoring from_upper_triangle(int vertex_count, int color_count,
                                          std::span<const Color> colors);

  /// Every pair gets `color`.
  static EdgeColoring monochromatic(int vertex_count, int color_count, Color color);

  int vertex_count() const noexcept { return size_; }
  int color_count() const noexcept { return colors_; }

  Color color(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * size_ + v];
  }

  /// Row of the color matrix for `u`; entry u is 0.
  std::span<const std::uint8_t> row(Vertex u) const {
    return {matrix_.data() + static_cast<std::size_t>(u) * size_, static_cast<std::size_t>(size_)};
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  EdgeColoring(int vertex_count, int color_count);

  int size_ = 0;
  int colors_ = 0;
  std::vector<std::uint8_t> matrix_;

  friend class ColoringBuilder;
};

/// Mutable staging area used by constructions that fill colors pair by pair.
class ColoringBuilder {
 public:
  ColoringBuilder(int vertex_count, int color_count, const Limits& limits = {});

  int vertex_count() const noexcept { return coloring_.size_; }

  void set(Vertex u, Vertex v, Color c) {
    auto n = static_cast<std::size_t>(coloring_.size_);
    auto byte = static_cast<std::uint8_t>(c);
    coloring_.matrix_[u * n + v] = byte;
    coloring_.matrix_[v * n + u] = byte;
  }

  /// Checks that every pair received a color in range and returns the result.
  EdgeColoring build() &&;

 private:
  EdgeColoring coloring_;
};

/// Forbidden clique sizes (k_1, ..., k_n), one per color; each k_i >= 2.
class ColoringSpec {
 public:
  explicit ColoringSpec(std::vector<int> forbidden);

  /// (k, ..., k) with `colors` entries.
  static ColoringSpec diagonal(int colors, int k);

  std::size_t size() const noexcept { return forbidden_.size(); }
  /// Forbidden clique size for 1-based `color`.
  int forbidden(Color color) const { return forbidden_.at(color - 1); }
  const std::vector<int>& values() const noexcept { return forbidden_; }

  friend bool operator==(const ColoringSpec&, const ColoringSpec&) = default;

 private:
  std::vector<int> forbidden_;
};

struct ColorReport {
  Color color = 0;
  int max_clique = 0;
  std::vector<Vertex> witness;

  friend bool operator==(const ColorReport&, const ColorReport&) = default;
};

/// Exact per-color maximum monochromatic cliques and the verdict against a
/// spec: pass iff max_clique < k_i for every color i.
struct VerificationReport {
  ColoringSpec spec{std::vector<int>{}};
  std::vector<ColorReport> colors;
  bool pass = false;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Graph of the pairs carrying `color`. Throws InvalidArgument when the color
/// is outside 1..n.
Graph color_class(const EdgeColoring& c, Color color);

/// Restriction to an ordered subset; entry i of the result is vertices[i].
/// A full permutation of 0..s-1 reorders the vertices.
EdgeColoring induced_subcoloring(const EdgeColoring& c, std::span<const Vertex> vertices);

/// Applies `perm` (perm[i-1] is the new label of color i) to every pair.
EdgeColoring relabel_colors(const EdgeColoring& c, std::span<const Color> perm);

/// The spec with entries moved along with `perm`, so that
/// validate(relabel(c, perm), permute_spec(spec, perm)) == validate(c, spec).
ColoringSpec permute_spec(const ColoringSpec& spec, std::span<const Color> perm);

/// Permutation that moves the listed vertices to the front (in the given
/// order) followed by the remaining vertices in increasing order.
std::vector<Vertex> front_permutation(int vertex_count, std::span<const Vertex> front);

struct SolverOptions;

/// Exact maximum clique per color class, compared against `spec`.
VerificationReport validate_coloring(const EdgeColoring& c, const ColoringSpec& spec,
                                     const SolverOptions& options);
VerificationReport validate_coloring(const EdgeColoring& c, const ColoringSpec& spec);

}  // namespace ramsey_forge
