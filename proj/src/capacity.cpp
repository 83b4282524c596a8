#include "ramsey_forge/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ramsey_forge/error.hpp"
#include "ramsey_forge/products.hpp"

namespace ramsey_forge {

CapacityBound capacity_lower_bound(const Graph& g, int max_power, const std::string& graph_id,
                                   const SolverOptions& options) {
  if (max_power < 1) {
    throw InvalidArgument("max power must be >= 1, got " + std::to_string(max_power));
  }
  CapacityBound out;
  out.graph_id = graph_id;
  for (int n = 1; n <= max_power; ++n) {
    SearchResult alpha;
    try {
      alpha = max_independent_set(graph_power(g, n, options.limits), options);
    } catch (const CapExceeded& e) {
      out.truncated = true;
      out.truncation_reason = "power " + std::to_string(n) + ": " + e.what();
      break;
    }
    CapacityRow row{n, alpha.size, std::pow(static_cast<double>(alpha.size), 1.0 / n),
                    std::move(alpha.witness)};
    if (n > 1 && row.alpha < out.rows.front().alpha * out.rows.back().alpha) {
      throw std::logic_error("alpha(G^" + std::to_string(n) +
                             ") fell below alpha(G) * alpha(G^" + std::to_string(n - 1) + ")");
    }
    out.best = std::max(out.best, row.root);
    out.rows.push_back(std::move(row));
  }
  return out;
}

bool emt_upper_bound_check(std::span<const Graph> graphs, std::int64_t ramsey_value,
                           const SolverOptions& options) {
  Graph product = strong_product(graphs, options.limits);
  return max_independent_set(product, options).size < ramsey_value;
}

Neighborhood majority_neighborhood(const EdgeColoring& c) {
  for (Color color = 1; color <= c.color_count(); ++color) {
    if (auto triangle = has_monochromatic_clique(c, color, 3)) {
      throw PreconditionViolation("coloring has a monochromatic triangle in color " +
                                      std::to_string(color),
                                  std::move(*triangle));
    }
  }
  Neighborhood best{0, 1, {}};
  int best_count = -1;
  std::vector<int> counts(static_cast<std::size_t>(c.color_count()) + 1);
  for (Vertex v = 0; v < c.vertex_count(); ++v) {
    std::fill(counts.begin(), counts.end(), 0);
    auto row = c.row(v);
    for (Vertex u = 0; u < c.vertex_count(); ++u) {
      if (u != v) ++counts[row[u]];
    }
    for (Color color = 1; color <= c.color_count(); ++color) {
      if (counts[color] > best_count) {
        best_count = counts[color];
        best.vertex = v;
        best.color = color;
      }
    }
  }
  auto row = c.row(best.vertex);
  for (Vertex u = 0; u < c.vertex_count(); ++u) {
    if (u != best.vertex && row[u] == best.color) best.members.push_back(u);
  }
  return best;
}

std::int64_t theorem2_bound(std::int64_t s, std::int64_t m, std::int64_t t) {
  if (s < 0 || m < 0 || t < 0 || m > s) {
    throw InvalidArgument("doubling bound needs s, m, t >= 0 and m <= s");
  }
  return s * s + m * t + 1;
}

CorollaryBound corollary_bound(std::int64_t r_n, std::int64_t r_n_minus_1, std::int64_t n) {
  if (r_n < 3 || r_n_minus_1 < 3 || n < 2) {
    throw InvalidArgument("corollary bound needs R_n(3), R_{n-1}(3) >= 3 and n >= 2");
  }
  const std::int64_t m = (r_n - 2 + n - 1) / n;
  return {m, (r_n - 1) * (r_n - 1) + m * (r_n_minus_1 - 1) + 1};
}

std::string BoundReport::claim() const {
  if (doubling) {
    return "R_" + std::to_string(2 * doubling->n) + "(" + std::to_string(doubling->k) +
           ") >= " + std::to_string(doubling->bound);
  }
  if (corollary) {
    return "R_" + std::to_string(2 * corollary->n) + "(3) >= " + std::to_string(corollary->bound);
  }
  return {};
}

std::vector<std::string> BoundReport::lines() const {
  std::vector<std::string> out;
  if (doubling) {
    out.push_back("doubling s=" + std::to_string(doubling->s) + " m=" +
                  std::to_string(doubling->m) + " t=" + std::to_string(doubling->t) +
                  " n=" + std::to_string(doubling->n) + " k=" + std::to_string(doubling->k));
    out.push_back("doubling-bound " + std::to_string(doubling->bound));
  }
  if (corollary) {
    out.push_back("corollary n=" + std::to_string(corollary->n) + " r_n=" +
                  std::to_string(corollary->r_n) +
                  " r_n_minus_1=" + std::to_string(corollary->r_n_minus_1));
    out.push_back("corollary-m " + std::to_string(corollary->m));
    out.push_back("corollary-bound " + std::to_string(corollary->bound));
  }
  return out;
}

BoundReport make_doubling_report(std::int64_t s, std::int64_t m, std::int64_t t, std::int64_t n,
                                 std::int64_t k, std::vector<std::string> provenance) {
  BoundReport r;
  r.doubling = BoundReport::Doubling{s, m, t, n, k, theorem2_bound(s, m, t)};
  r.provenance = std::move(provenance);
  return r;
}

BoundReport make_corollary_report(std::int64_t r_n, std::int64_t r_n_minus_1, std::int64_t n,
                                  std::vector<std::string> provenance) {
  auto [m, bound] = corollary_bound(r_n, r_n_minus_1, n);
  BoundReport r;
  r.corollary = BoundReport::Corollary{n, r_n, r_n_minus_1, m, bound};
  r.provenance = std::move(provenance);
  return r;
}

}  // namespace ramsey_forge
