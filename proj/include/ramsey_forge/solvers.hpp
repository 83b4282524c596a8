#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey_forge/bitset.hpp"
#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/limits.hpp"

namespace ramsey_forge {

struct SolverOptions {
  /// Worker threads for root-branch parallelism. Results never depend on it.
  int threads = 1;
  Limits limits = {};
};

/// Exact search outcome. `witness` is sorted ascending and has exactly
/// `size` vertices. `nodes_explored` is diagnostic only; with more than
/// one thread it varies between runs.
struct SearchResult {
  int size = 0;
  std::vector<Vertex> witness;
  std::uint64_t nodes_explored = 0;
  bool exact = true;
};

/// Adjacency as one bitset row per vertex.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : rows_(n, BitSet(n)) {}

  static BitMatrix from_graph(const Graph& g);
  static BitMatrix from_color_class(const EdgeColoring& c, Color color);

  std::size_t size() const noexcept { return rows_.size(); }
  const BitSet& row(std::size_t v) const { return rows_[v]; }

  void add_edge(std::size_t u, std::size_t v) {
    rows_[u].set(v);
    rows_[v].set(u);
  }

  /// Complement without loops.
  BitMatrix complement() const;

 private:
  std::vector<BitSet> rows_;
};

/// Exact maximum clique by branch and bound with greedy-coloring bounds.
/// Among maximum cliques the returned one is fixed by the vertex order alone,
/// so repeated calls (with any thread count) return the same witness.
SearchResult max_clique(const BitMatrix& adjacency, int threads = 1);

SearchResult max_clique(const Graph& g, const SolverOptions& options = {});

/// Exact independence number alpha(g) with a witness independent set.
SearchResult max_independent_set(const Graph& g, const SolverOptions& options = {});

/// Some k-clique in the color class of `color`, or nullopt. Stops at the
/// first witness (lexicographically smallest), which need not be maximum.
std::optional<std::vector<Vertex>> has_monochromatic_clique(const EdgeColoring& c, Color color,
                                                            int k);

/// Searches every coloring of K_s in n colors, enumerated as base-n digit
/// strings over the pairs (0,1),(0,2),...,(s-2,s-1) with the first pair the
/// most significant digit, digit d meaning color d+1. Returns the first
/// coloring without a monochromatic K_k, or nullopt when none exists
/// (i.e. s >= R_n(k)).
std::optional<EdgeColoring> find_ramsey_coloring(int s, int n, int k, const Limits& limits = {});

/// True iff some n-coloring of K_s has no monochromatic K_k, i.e. s < R_n(k).
bool exhaustive_ramsey_check(int s, int n, int k, const Limits& limits = {});

}  // namespace ramsey_forge
