#include "ramsey_forge/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "ramsey_forge/error.hpp"

namespace ramsey_forge {

BitMatrix BitMatrix::from_graph(const Graph& g) {
  BitMatrix m(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) m.rows_[u].set(static_cast<std::size_t>(v));
  }
  return m;
}

BitMatrix BitMatrix::from_color_class(const EdgeColoring& c, Color color) {
  if (color < 1 || color > c.color_count()) {
    throw InvalidArgument("color " + std::to_string(color) + " outside 1.." +
                          std::to_string(c.color_count()));
  }
  BitMatrix m(static_cast<std::size_t>(c.vertex_count()));
  for (Vertex u = 0; u < c.vertex_count(); ++u) {
    auto row = c.row(u);
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
      if (v != u && row[v] == color) m.rows_[u].set(static_cast<std::size_t>(v));
    }
  }
  return m;
}

BitMatrix BitMatrix::complement() const {
  BitMatrix m = *this;
  for (std::size_t v = 0; v < m.rows_.size(); ++v) {
    m.rows_[v].flip();
    m.rows_[v].reset(v);
  }
  return m;
}

namespace {

void check_solver_cap(std::uint64_t vertices, const Limits& limits) {
  if (vertices > limits.solver_vertices) {
    throw CapExceeded("exact search on " + std::to_string(vertices) + " vertices",
                      vertices, limits.solver_vertices);
  }
}

// Greedy sequential coloring of `candidates` in index order. Vertices come
// out grouped by color class; bounds[i] is the color of order[i], so any
// clique inside order[0..i] has at most bounds[i] vertices.
void color_sort(const BitMatrix& adj, BitSet uncolored, std::vector<int>& order,
                std::vector<int>& bounds) {
  order.clear();
  bounds.clear();
  const std::size_t n = adj.size();
  int color = 0;
  while (!uncolored.none()) {
    ++color;
    BitSet available = uncolored;
    for (std::size_t v = available.next(); v < n; v = available.next(v + 1)) {
      available.subtract(adj.row(v));
      uncolored.reset(v);
      order.push_back(static_cast<int>(v));
      bounds.push_back(color);
    }
  }
}

// Root branches are numbered in the order a sequential search visits them.
// The answer is the maximum clique from the lowest-numbered branch that
// attains the maximum, taking the first one met in depth-first order inside
// that branch. Workers share only the best (size, branch) pair and use it for
// pruning in a way that never cuts that answer, so any number of workers
// produces the same witness.
class CliqueSearch {
 public:
  explicit CliqueSearch(const BitMatrix& adj) : adj_(adj) {}

  SearchResult run(int threads) {
    const std::size_t n = adj_.size();
    if (n == 0) return {};

    BitSet all(n);
    all.set_all();
    color_sort(adj_, all, top_order_, top_bounds_);

    const std::size_t branches = n;
    results_.assign(branches, Branch{});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t r = next++; r < branches; r = next++) run_branch(r);
    };
    const int workers = std::clamp(threads, 1, static_cast<int>(branches));
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    }

    SearchResult out;
    const Branch* winner = nullptr;
    for (const auto& b : results_) {
      out.nodes_explored += b.nodes;
      if (winner == nullptr || b.size > winner->size) winner = &b;
    }
    out.size = winner->size;
    out.witness.assign(winner->clique.begin(), winner->clique.end());
    std::sort(out.witness.begin(), out.witness.end());
    return out;
  }

 private:
  struct Branch {
    int size = 0;
    std::vector<int> clique;
    std::uint64_t nodes = 0;
  };

  static constexpr std::uint64_t kRootMask = 0xFFFFFFFFULL;

  // Smallest clique size branch `root` still has to reach to matter.
  int global_need(std::size_t root) const {
    std::uint64_t key = incumbent_.load(std::memory_order_relaxed);
    if (key == 0) return 1;
    int size = static_cast<int>(key >> 32);
    std::size_t owner = static_cast<std::size_t>(kRootMask - (key & kRootMask));
    return owner < root ? size + 1 : size;
  }

  void publish(int size, std::size_t root) {
    std::uint64_t key = (static_cast<std::uint64_t>(size) << 32) | (kRootMask - root);
    std::uint64_t cur = incumbent_.load(std::memory_order_relaxed);
    while (key > cur && !incumbent_.compare_exchange_weak(cur, key, std::memory_order_relaxed)) {
    }
  }

  void record(Branch& br, const std::vector<int>& clique, std::size_t root) {
    if (static_cast<int>(clique.size()) > br.size) {
      br.size = static_cast<int>(clique.size());
      br.clique = clique;
      publish(br.size, root);
    }
  }

  void run_branch(std::size_t root) {
    const std::size_t n = adj_.size();
    const std::size_t i = n - 1 - root;
    Branch& br = results_[root];
    if (top_bounds_[i] < global_need(root)) return;

    const auto v = static_cast<std::size_t>(top_order_[i]);
    BitSet candidates(n);
    for (std::size_t j = 0; j < i; ++j) candidates.set(static_cast<std::size_t>(top_order_[j]));
    candidates &= adj_.row(v);

    std::vector<int> clique{static_cast<int>(v)};
    ++br.nodes;
    if (candidates.none()) {
      record(br, clique, root);
    } else {
      expand(clique, std::move(candidates), br, root);
    }
  }

  void expand(std::vector<int>& clique, BitSet candidates, Branch& br, std::size_t root) {
    ++br.nodes;
    std::vector<int> order;
    std::vector<int> bounds;
    color_sort(adj_, candidates, order, bounds);
    for (std::size_t k = order.size(); k-- > 0;) {
      const int need = std::max(br.size + 1, global_need(root));
      if (static_cast<int>(clique.size()) + bounds[k] < need) return;
      const auto v = static_cast<std::size_t>(order[k]);
      clique.push_back(order[k]);
      BitSet next = candidates & adj_.row(v);
      if (next.none()) {
        record(br, clique, root);
      } else {
        expand(clique, std::move(next), br, root);
      }
      clique.pop_back();
      candidates.reset(v);
    }
  }

  const BitMatrix& adj_;
  std::vector<int> top_order_;
  std::vector<int> top_bounds_;
  std::vector<Branch> results_;
  std::atomic<std::uint64_t> incumbent_{0};
};

// Renumbers vertices by non-increasing degree (ties by lower index); the
// search explores dense vertices as late roots and sparse ones first.
std::vector<int> degree_order(const BitMatrix& adj) {
  std::vector<int> perm(adj.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> degree(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) degree[v] = adj.row(v).count();
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });
  return perm;
}

}  // namespace

SearchResult max_clique(const BitMatrix& adjacency, int threads) {
  const std::size_t n = adjacency.size();
  auto perm = degree_order(adjacency);
  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[perm[p]] = p;

  BitMatrix renumbered(n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto& row = adjacency.row(u);
    for (std::size_t v = row.next(u + 1); v < n; v = row.next(v + 1)) {
      renumbered.add_edge(position[u], position[v]);
    }
  }

  CliqueSearch search(renumbered);
  SearchResult result = search.run(threads);
  for (auto& v : result.witness) v = perm[static_cast<std::size_t>(v)];
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

SearchResult max_clique(const Graph& g, const SolverOptions& options) {
  check_solver_cap(static_cast<std::uint64_t>(g.vertex_count()), options.limits);
  return max_clique(BitMatrix::from_graph(g), options.threads);
}

SearchResult max_independent_set(const Graph& g, const SolverOptions& options) {
  check_solver_cap(static_cast<std::uint64_t>(g.vertex_count()), options.limits);
  return max_clique(BitMatrix::from_graph(g).complement(), options.threads);
}

namespace {

bool find_clique(const BitMatrix& adj, std::vector<Vertex>& clique, const BitSet& candidates,
                 int remaining) {
  if (remaining == 0) return true;
  if (candidates.count() < static_cast<std::size_t>(remaining)) return false;
  const std::size_t n = adj.size();
  for (std::size_t v = candidates.next(); v < n; v = candidates.next(v + 1)) {
    BitSet next = candidates & adj.row(v);
    next.clear_through(v);
    clique.push_back(static_cast<Vertex>(v));
    if (find_clique(adj, clique, next, remaining - 1)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> has_monochromatic_clique(const EdgeColoring& c, Color color,
                                                            int k) {
  if (k < 2) throw InvalidArgument("clique size must be at least 2, got " + std::to_string(k));
  BitMatrix adj = BitMatrix::from_color_class(c, color);
  BitSet all(adj.size());
  all.set_all();
  std::vector<Vertex> clique;
  if (find_clique(adj, clique, all, k)) return clique;
  return std::nullopt;
}

namespace {

// Monochromatic K_k test on per-color 64-bit adjacency masks.
bool mask_has_clique(const std::vector<std::uint64_t>& rows, std::uint64_t candidates,
                     int remaining) {
  if (remaining == 0) return true;
  while (std::popcount(candidates) >= remaining) {
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (mask_has_clique(rows, candidates & rows[static_cast<std::size_t>(v)], remaining - 1)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<EdgeColoring> find_ramsey_coloring(int s, int n, int k, const Limits& limits) {
  if (s < 1 || n < 1 || n > kMaxColors || k < 2) {
    throw InvalidArgument("exhaustive check needs s >= 1, 1 <= n <= 255 and k >= 2");
  }
  const auto pairs = static_cast<std::size_t>(s) * static_cast<std::size_t>(s - 1) / 2;

  unsigned long long total = 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    if (total > limits.enumeration / static_cast<unsigned long long>(n)) {
      throw CapExceeded("enumerating " + std::to_string(n) + "^" + std::to_string(pairs) +
                            " colorings",
                        limits.enumeration + 1, limits.enumeration);
    }
    total *= static_cast<unsigned long long>(n);
  }

  std::vector<std::pair<int, int>> pair_list;
  pair_list.reserve(pairs);
  for (int u = 0; u < s; ++u) {
    for (int v = u + 1; v < s; ++v) pair_list.emplace_back(u, v);
  }

  std::vector<Color> digits(pairs, 0);
  auto to_coloring = [&] {
    std::vector<Color> colors(pairs);
    for (std::size_t i = 0; i < pairs; ++i) colors[i] = digits[i] + 1;
    return EdgeColoring::from_upper_triangle(s, n, colors);
  };

  if (s > 64) {
    // Only reachable with one color (or a raised cap): check the coloring directly.
    for (unsigned long long idx = 0; idx < total; ++idx) {
      EdgeColoring c = to_coloring();
      bool clean = true;
      for (Color col = 1; col <= n && clean; ++col) {
        clean = !has_monochromatic_clique(c, col, k).has_value();
      }
      if (clean) return c;
      for (std::size_t i = pairs; i-- > 0;) {
        if (++digits[i] < n) break;
        digits[i] = 0;
      }
    }
    return std::nullopt;
  }

  const std::uint64_t everyone = s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
  std::vector<std::vector<std::uint64_t>> masks(static_cast<std::size_t>(n),
                                                std::vector<std::uint64_t>(s, 0));
  for (unsigned long long idx = 0; idx < total; ++idx) {
    for (auto& m : masks) std::fill(m.begin(), m.end(), 0);
    for (std::size_t i = 0; i < pairs; ++i) {
      auto [u, v] = pair_list[i];
      auto& m = masks[static_cast<std::size_t>(digits[i])];
      m[u] |= std::uint64_t{1} << v;
      m[v] |= std::uint64_t{1} << u;
    }
    bool clean = true;
    for (int col = 0; col < n && clean; ++col) {
      // Restrict to higher-numbered neighbors so each clique is seen once.
      std::vector<std::uint64_t> forward(masks[col]);
      for (int u = 0; u < s; ++u) {
        forward[u] &= u == 63 ? 0 : ~((std::uint64_t{2} << u) - 1);
      }
      clean = !mask_has_clique(forward, everyone, k);
    }
    if (clean) return to_coloring();
    for (std::size_t i = pairs; i-- > 0;) {
      if (++digits[i] < n) break;
      digits[i] = 0;
    }
  }
  return std::nullopt;
}

bool exhaustive_ramsey_check(int s, int n, int k, const Limits& limits) {
  return find_ramsey_coloring(s, n, k, limits).has_value();
}

}  // namespace ramsey_forge
